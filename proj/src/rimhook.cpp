#include "dsp/rimhook.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dsp::rimhook {

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  return p;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool fits_in_box(const Partition& p, int rows, int cols) {
  if (int(p.size()) > rows) return false;
  return p.empty() || p[0] <= cols;
}

namespace {

// Both arguments normalized.
bool contains(const Partition& nu, const Partition& la) {
  if (la.size() > nu.size()) return false;
  for (size_t i = 0; i < la.size(); ++i)
    if (la[i] > nu[i]) return false;
  return true;
}

}  // namespace

BigInt lr_coefficient(const Partition& lambda_in, const Partition& mu_in,
                      const Partition& nu_in) {
  Partition la = normalized(lambda_in), mu = normalized(mu_in), nu = normalized(nu_in);
  if (weight(nu) != weight(la) + weight(mu))
    throw std::invalid_argument("lr_coefficient needs |nu| = |lambda| + |mu|");
  if (!contains(nu, la)) return BigInt(0);
  if (mu.empty()) return BigInt(1);

  // Cells of nu/la in reading order: top to bottom, right to left.  Filling in
  // this order lets us check the lattice-word property prefix by prefix.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int rr = 0; rr < int(nu.size()); ++rr) {
    int lo = rr < int(la.size()) ? la[rr] : 0;
    for (int c = nu[rr] - 1; c >= lo; --c) cells.push_back({rr, c});
  }

  const int values = int(mu.size());
  std::vector<int> remaining(mu.begin(), mu.end());
  std::vector<int> placed(values, 0);
  // Cells inside la carry -1; unfilled skew cells carry 0.  A skew cell's
  // upper neighbour is always visited first in this reading order.
  std::vector<std::vector<int>> entry(nu.size());
  for (int rr = 0; rr < int(nu.size()); ++rr) {
    entry[rr].assign(nu[rr], 0);
    int lo = rr < int(la.size()) ? la[rr] : 0;
    for (int c = 0; c < lo; ++c) entry[rr][c] = -1;
  }

  BigInt count(0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      count += BigInt(1);
      return;
    }
    auto [rr, c] = cells[k];
    // Row entries weakly increase left to right; the right neighbour is filled.
    int hi = c + 1 < nu[rr] ? entry[rr][c + 1] : values;
    // Column entries strictly increase top to bottom.
    int lo = 1;
    if (rr > 0 && c < int(entry[rr - 1].size())) {
      int above = entry[rr - 1][c];
      if (above > 0) lo = above + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      if (remaining[v - 1] == 0) continue;
      // Lattice word: after placing v, #v must not exceed #(v-1).
      if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
      entry[rr][c] = v;
      --remaining[v - 1];
      ++placed[v - 1];
      rec(k + 1);
      entry[rr][c] = 0;
      ++remaining[v - 1];
      --placed[v - 1];
    }
  };
  rec(0);
  return count;
}

namespace {

// Reduce a (<= r)-row partition by removing n-rim-hooks until it fits the
// r x (n-r) box.  Returns false when the reduction dies; otherwise yields the
// reduced partition, hook count and sign.
bool reduce_by_rim_hooks(const Partition& rho, int r, int n, Partition& out, int& hooks,
                         int& sign) {
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i) beta[i] = (i < int(rho.size()) ? rho[i] : 0) + (r - 1 - i);
  hooks = 0;
  sign = 1;
  while (true) {
    int imax = int(std::max_element(beta.begin(), beta.end()) - beta.begin());
    if (beta[imax] <= n - 1) break;
    int target = beta[imax] - n;
    int between = 0;
    for (int j = 0; j < r; ++j) {
      if (beta[j] == target) return false;  // collision: repeated residue
      if (beta[j] > target && beta[j] < beta[imax]) ++between;
    }
    // The hook spans between+1 rows; its sign is (-1)^(r - height).
    if ((r - 1 - between) % 2 == 1) sign = -sign;
    beta[imax] = target;
    ++hooks;
  }
  std::sort(beta.rbegin(), beta.rend());
  out.assign(r, 0);
  for (int i = 0; i < r; ++i) out[i] = beta[i] - (r - 1 - i);
  out = normalized(out);
  return true;
}

void enumerate_partitions(int total, int max_part, int max_rows, Partition& cur,
                          const std::function<void(const Partition&)>& sink) {
  if (total == 0) {
    sink(cur);
    return;
  }
  if (max_rows == 0) return;
  int hi = std::min(total, max_part);
  for (int part = hi; part >= 1; --part) {
    cur.push_back(part);
    enumerate_partitions(total - part, part, max_rows - 1, cur, sink);
    cur.pop_back();
  }
}

}  // namespace

std::map<std::pair<Partition, int>, BigInt> quantum_product(int r, int n,
                                                            const Partition& lambda,
                                                            const Partition& mu) {
  Partition la = normalized(lambda), m = normalized(mu);
  if (!fits_in_box(la, r, n - r) || !fits_in_box(m, r, n - r))
    throw std::invalid_argument("classes must fit in the r x (n-r) box");
  std::map<std::pair<Partition, int>, BigInt> out;
  int total = weight(la) + weight(m);
  int width = (la.empty() ? 0 : la[0]) + (m.empty() ? 0 : m[0]);
  Partition cur;
  enumerate_partitions(total, width, r, cur, [&](const Partition& rho) {
    BigInt c = lr_coefficient(la, m, rho);
    if (c.is_zero()) return;
    Partition red;
    int hooks = 0, sign = 1;
    if (!reduce_by_rim_hooks(rho, r, n, red, hooks, sign)) return;
    auto key = std::make_pair(red, hooks);
    auto it = out.find(key);
    BigInt add = sign > 0 ? c : -c;
    if (it == out.end())
      out[key] = add;
    else {
      it->second += add;
      if (it->second.is_zero()) out.erase(it);
    }
  });
  if (total == 0) out[{Partition{}, 0}] = BigInt(1);
  return out;
}

BigInt quantum_lr(int r, int n, const Partition& lambda, const Partition& mu,
                  const Partition& nu, int d) {
  if (d < 0) return BigInt(0);
  auto prod = quantum_product(r, n, lambda, mu);
  auto it = prod.find({normalized(nu), d});
  return it == prod.end() ? BigInt(0) : it->second;
}

Partition partition_of_index_set(int r, int n, const std::vector<int>& I) {
  if (int(I.size()) != r) throw std::invalid_argument("index set size must equal r");
  std::vector<int> s = I;
  std::sort(s.begin(), s.end());
  Partition la(r);
  for (int j = 1; j <= r; ++j) {
    la[j - 1] = n - r + j - s[j - 1];
    if (la[j - 1] < 0 || la[j - 1] > n - r)
      throw std::invalid_argument("index set outside 1..n or not strictly increasing");
  }
  return normalized(la);
}

std::vector<int> index_set_of_partition(int r, int n, const Partition& lambda) {
  Partition la = normalized(lambda);
  std::vector<int> I(r);
  for (int j = 1; j <= r; ++j) {
    int lj = j - 1 < int(la.size()) ? la[j - 1] : 0;
    I[j - 1] = n - r + j - lj;
  }
  return I;
}

Partition dual_in_box(int r, int n, const Partition& lambda) {
  Partition la = normalized(lambda);
  Partition dual(r);
  for (int j = 0; j < r; ++j) {
    int lj = r - 1 - j < int(la.size()) ? la[r - 1 - j] : 0;
    dual[j] = (n - r) - lj;
  }
  return normalized(dual);
}

BigInt gw_number_typeA_partitions(int r, int n, const std::vector<Partition>& classes,
                                  int d) {
  if (classes.empty()) throw std::invalid_argument("need at least one class");
  if (d < 0) return BigInt(0);
  long long dim = (long long)r * (n - r);
  long long codim_sum = 0;
  for (const auto& c : classes) codim_sum += weight(c);
  if (codim_sum != dim + (long long)d * n) return BigInt(0);

  // Multiply the first k-1 classes, then pair against the last via duality.
  std::map<std::pair<Partition, int>, BigInt> acc;
  acc[{Partition{}, 0}] = BigInt(1);
  for (size_t j = 0; j + 1 < classes.size(); ++j) {
    std::map<std::pair<Partition, int>, BigInt> next;
    for (const auto& [key, coeff] : acc) {
      auto prod = quantum_product(r, n, key.first, classes[j]);
      for (const auto& [pkey, pc] : prod) {
        int dd = key.second + pkey.second;
        if (dd > d) continue;
        auto& slot = next[{pkey.first, dd}];
        slot += coeff * pc;
        if (slot.is_zero()) next.erase({pkey.first, dd});
      }
    }
    acc = std::move(next);
  }
  auto it = acc.find({dual_in_box(r, n, normalized(classes.back())), d});
  return it == acc.end() ? BigInt(0) : it->second;
}

BigInt gw_number_typeA(int r, int n, const std::vector<std::vector<int>>& index_sets,
                       int d) {
  std::vector<Partition> classes;
  for (const auto& I : index_sets) classes.push_back(partition_of_index_set(r, n, I));
  return gw_number_typeA_partitions(r, n, classes, d);
}

}  // namespace dsp::rimhook
