#include "odet/its.hpp"

#include <sstream>

namespace odet {

namespace {

StateSet union_along(const std::vector<StateSet>& b_family, const std::vector<int>& alpha) {
  StateSet u;
  for (int i : alpha) u.unite_with(b_family[static_cast<std::size_t>(i - 1)]);
  return u;
}

StateSet cover_of_union(const std::vector<StateSet>& b_family, const StateSet& u) {
  StateSet covered;
  for (int j = 1; j <= static_cast<int>(b_family.size()); ++j)
    if (b_family[static_cast<std::size_t>(j - 1)].subset_of(u)) covered.insert(j);
  return covered;
}

StateSet mini_of_union(const std::vector<StateSet>& b_family, const StateSet& u) {
  int k = static_cast<int>(b_family.size());
  StateSet covered = cover_of_union(b_family, u);
  StateSet result;
  for (int j = 1; j <= k; ++j) {
    if (covered.contains(j)) continue;
    StateSet ext_j = set_union(b_family[static_cast<std::size_t>(j - 1)], u);
    bool minimal = true;
    for (int other = 1; other <= k && minimal; ++other) {
      if (other == j || covered.contains(other)) continue;
      StateSet ext_o = set_union(b_family[static_cast<std::size_t>(other - 1)], u);
      if (ext_o == ext_j) {
        if (other < j) minimal = false;  // equal extension, smaller index wins
      } else if (ext_o.subset_of(ext_j)) {
        minimal = false;
      }
    }
    if (minimal) result.insert(j);
  }
  return result;
}

}  // namespace

StateSet cover(const std::vector<StateSet>& b_family, const std::vector<int>& alpha) {
  return cover_of_union(b_family, union_along(b_family, alpha));
}

StateSet mini(const std::vector<StateSet>& b_family, const std::vector<int>& alpha) {
  return mini_of_union(b_family, union_along(b_family, alpha));
}

const StateSet& MiniCache::of_union(const StateSet& accumulated) {
  auto it = memo_.find(accumulated);
  if (it == memo_.end())
    it = memo_.emplace(accumulated, mini_of_union(*b_family_, accumulated)).first;
  return it->second;
}

const StateSet& MiniCache::of_path(const std::vector<int>& alpha) {
  return of_union(union_along(*b_family_, alpha));
}

namespace {

void build_children(const std::vector<StateSet>& b_family, MiniCache& cache, ItsNode& node) {
  for (int j : cache.of_union(node.cumulative)) {
    ItsNode child;
    child.label = j;
    child.own = b_family[static_cast<std::size_t>(j - 1)];
    child.cumulative = set_union(node.cumulative, child.own);
    build_children(b_family, cache, child);
    node.children.push_back(std::move(child));
  }
}

}  // namespace

ItsTree build_its(int n, int k, const std::vector<StateSet>& b_family) {
  ItsTree tree;
  tree.n = n;
  tree.k = k;
  MiniCache cache(b_family);
  build_children(b_family, cache, tree.root);
  return tree;
}

namespace {

int count_paths_from(const ItsNode& node) {
  if (node.children.empty()) return 1;
  int total = 0;
  for (const ItsNode& c : node.children) total += count_paths_from(c);
  return total;
}

int count_nodes_from(const ItsNode& node) {
  int total = 1;
  for (const ItsNode& c : node.children) total += count_nodes_from(c);
  return total;
}

std::string render_set(const StateSet& s) {
  std::string out = "{";
  bool first = true;
  for (int q : s) {
    if (!first) out += ',';
    out += 'q';
    out += std::to_string(q);
    first = false;
  }
  out += '}';
  return out;
}

void text_walk(const ItsNode& node, int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << node.label << ':' << render_set(node.own) << '\n';
  for (const ItsNode& c : node.children) text_walk(c, depth + 1, out);
}

void canonical_walk(const ItsNode& node, std::ostringstream& out) {
  out << node.label << ':' << render_set(node.own);
  if (!node.children.empty()) {
    out << '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out << ' ';
      canonical_walk(node.children[i], out);
    }
    out << ')';
  }
}

void dot_walk(const ItsNode& node, int& counter, int parent_id, std::ostringstream& out) {
  int id = counter++;
  out << "  n" << id << " [label=\"" << node.label << ":" << render_set(node.own) << "\"];\n";
  if (parent_id >= 0) out << "  n" << parent_id << " -> n" << id << ";\n";
  for (const ItsNode& c : node.children) dot_walk(c, counter, id, out);
}

}  // namespace

int count_paths(const ItsTree& tree) { return count_paths_from(tree.root); }

int count_nodes(const ItsTree& tree) { return count_nodes_from(tree.root); }

std::string its_to_text(const ItsTree& tree) {
  std::ostringstream out;
  text_walk(tree.root, 0, out);
  return out.str();
}

std::string its_canonical(const ItsTree& tree) {
  std::ostringstream out;
  canonical_walk(tree.root, out);
  return out.str();
}

std::string its_to_dot(const ItsTree& tree) {
  std::ostringstream out;
  out << "digraph its {\n  node [shape=box];\n";
  int counter = 0;
  dot_walk(tree.root, counter, -1, out);
  out << "}\n";
  return out.str();
}

}  // namespace odet
