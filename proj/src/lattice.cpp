#include <algorithm>
#include <map>
#include <set>

#include "charkern/chartab.hpp"
#include "charkern/group.hpp"

namespace charkern {

namespace {

std::vector<Subgroup> masks_to_sorted_subgroups(GroupPtr g,
                                                const std::set<std::vector<std::uint64_t>>& masks) {
  std::vector<Subgroup> out;
  for (const auto& m : masks) {
    Subgroup s;
    s.parent = g;
    s.members = mask_members(g->n, m);
    s.normal = true;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(GroupPtr g, const CharacterTable& t) {
  // every normal subgroup is an intersection of irreducible kernels, so the
  // kernels plus pairwise-intersection closure give the whole lattice
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> items;
  auto push = [&](std::vector<std::uint64_t> m) {
    if (seen.insert(m).second) items.push_back(std::move(m));
  };
  push(member_mask(g->n, whole_group(g).members));
  for (std::size_t r = 0; r < t.num_rows(); ++r)
    push(member_mask(g->n, kernel_of(t, r).members));
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::uint64_t> m(items[i].size());
      for (std::size_t w = 0; w < m.size(); ++w) m[w] = items[i][w] & items[j][w];
      push(std::move(m));
    }
  }
  return masks_to_sorted_subgroups(g, seen);
}

std::vector<Subgroup> normal_subgroups_oracle(GroupPtr g, const ConjClassSet& cls) {
  const std::uint32_t r = static_cast<std::uint32_t>(cls.size());

  // classes hit by C_i * C_j; conjugation-invariance makes one representative
  // of C_j enough
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> support_memo;
  auto support = [&](std::uint32_t i, std::uint32_t j) -> const std::vector<std::uint32_t>& {
    auto key = std::minmax(i, j);
    auto it = support_memo.find(key);
    if (it != support_memo.end()) return it->second;
    std::set<std::uint32_t> hit;
    const std::uint32_t y = cls.classes[key.second].rep;
    for (auto x : cls.classes[key.first].members) hit.insert(cls.class_of[g->at(x, y)]);
    return support_memo.emplace(key, std::vector<std::uint32_t>(hit.begin(), hit.end()))
        .first->second;
  };

  // depth-first over include/exclude per class; a chosen "in" class forces in
  // every class of its products with the current "in" set (closure), and a
  // forced class that was excluded kills the branch
  enum : std::uint8_t { kUndecided = 0, kIn = 1, kOut = 2 };
  std::set<std::vector<std::uint64_t>> found;

  struct Frame {
    std::vector<std::uint8_t> status;
    std::vector<std::uint32_t> in_list;
    std::size_t pairs_done;  // pairs (in_list[a], in_list[b]) with b <= a, counted flat
  };

  auto propagate = [&](Frame& f) -> bool {
    // flat index over pairs (a, b), b <= a, in discovery order
    while (true) {
      std::size_t total = f.in_list.size() * (f.in_list.size() + 1) / 2;
      if (f.pairs_done >= total) return true;
      std::size_t a = 0;
      while ((a + 1) * (a + 2) / 2 <= f.pairs_done) ++a;
      std::size_t b = f.pairs_done - a * (a + 1) / 2;
      ++f.pairs_done;
      for (auto k : support(f.in_list[a], f.in_list[b])) {
        if (f.status[k] == kOut) return false;
        if (f.status[k] == kUndecided) {
          f.status[k] = kIn;
          f.in_list.push_back(k);
        }
      }
    }
  };

  std::vector<Frame> stack;
  {
    Frame root;
    root.status.assign(r, kUndecided);
    root.status[0] = kIn;
    root.in_list.push_back(0);
    root.pairs_done = 0;
    if (propagate(root)) stack.push_back(std::move(root));
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    std::uint32_t next = r;
    for (std::uint32_t c = 0; c < r; ++c) {
      if (f.status[c] == kUndecided) {
        next = c;
        break;
      }
    }
    if (next == r) {
      std::vector<std::uint32_t> members;
      for (auto c : f.in_list) {
        const auto& mem = cls.classes[c].members;
        members.insert(members.end(), mem.begin(), mem.end());
      }
      std::sort(members.begin(), members.end());
      if (g->n % members.size() != 0)
        throw InternalError("closed class union has non-divisor size");
      found.insert(member_mask(g->n, members));
      continue;
    }
    Frame out = f;
    out.status[next] = kOut;
    stack.push_back(std::move(out));
    f.status[next] = kIn;
    f.in_list.push_back(next);
    if (propagate(f)) stack.push_back(std::move(f));
  }
  return masks_to_sorted_subgroups(g, found);
}

}  // namespace charkern
