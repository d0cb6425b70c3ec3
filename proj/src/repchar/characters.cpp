#include "hypstab/repchar/characters.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "hypstab/core/errors.hpp"

namespace hypstab {

namespace {

// Remove every border strip of size k from λ, via beta-numbers.
// Calls fn(remaining partition, sign).
template <class Fn>
void for_each_rim_hook(const Partition& lambda, int k, Fn fn) {
  int L = lambda.length();
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda.part(i) + (L - 1 - i);
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb(beta);
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) parts.push_back(part);
    }
    fn(Partition(std::move(parts)), (between % 2) ? -1 : 1);
  }
}

std::mutex table_mutex;
std::map<int, std::unique_ptr<CharacterTable>> tables;

const CharacterTable& table_locked(int n) {
  auto& slot = tables[n];
  if (slot) return *slot;
  auto t = std::make_unique<CharacterTable>();
  t->n = n;
  const auto& ps = partitions_of(n);
  for (size_t i = 0; i < ps.size(); ++i) t->idx[ps[i]] = static_cast<int>(i);
  t->chi.assign(ps.size(), std::vector<std::int64_t>(ps.size(), 0));
  if (n == 0) {
    t->chi[0][0] = 1;
  } else {
    for (size_t r = 0; r < ps.size(); ++r) {
      const Partition& rho = ps[r];
      int k = rho.largest();
      Partition rest = rho.remove_parts(Partition({k}));
      const CharacterTable& sub = table_locked(n - k);
      int rest_idx = sub.index(rest);
      for (size_t l = 0; l < ps.size(); ++l) {
        std::int64_t v = 0;
        for_each_rim_hook(ps[l], k, [&](const Partition& mu, int sgn) {
          v += sgn * sub.chi[sub.index(mu)][rest_idx];
        });
        t->chi[l][r] = v;
      }
    }
  }
  slot = std::move(t);
  return *slot;
}

}  // namespace

int CharacterTable::index(const Partition& p) const { return idx.at(p); }

const CharacterTable& character_table(int n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return table_locked(n);
}

std::int64_t sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw SizeMismatch("|lambda|=" + std::to_string(lambda.weight()) +
                       " but |rho|=" + std::to_string(rho.weight()));
  const auto& t = character_table(lambda.weight());
  return t.chi[t.index(lambda)][t.index(rho)];
}

}  // namespace hypstab
