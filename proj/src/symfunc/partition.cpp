#include "hypstab/symfunc/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "hypstab/core/errors.hpp"

namespace hypstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidPartition("nonpositive part");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidPartition("parts not weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw InvalidPartition("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
  std::vector<int> c(largest(), 0);
  for (int x : parts_)
    for (int j = 0; j < x; ++j) ++c[j];
  return Partition(std::move(c));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> v;
  v.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(v), std::greater<>());
  return Partition(std::move(v));
}

Partition Partition::scaled(int n) const {
  std::vector<int> v(parts_);
  for (int& x : v) x *= n;
  return Partition(std::move(v));
}

Partition Partition::remove_parts(const Partition& sub) const {
  std::vector<int> v;
  size_t j = 0;
  for (int x : parts_) {
    if (j < sub.parts_.size() && sub.parts_[j] == x) {
      ++j;
      continue;
    }
    v.push_back(x);
  }
  if (j != sub.parts_.size()) throw InvalidPartition("remove_parts: not a sub-multiset");
  return Partition(std::move(v));
}

bool Partition::contains_diagram(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Integer Partition::z() const {
  Integer r = 1;
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    long m = static_cast<long>(j - i);
    r *= ipow(parts_[i], m) * factorial(m);
    i = j;
  }
  return r;
}

std::string Partition::str() const {
  if (parts_.empty()) return "∅";
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

size_t PartitionHash::operator()(const Partition& p) const {
  size_t h = 1469598103934665603ull;
  for (int x : p.parts()) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
  return h;
}

namespace {

void gen(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    if (n >= 0) gen(n, n, cur, *slot);
  }
  return *slot;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    const auto& ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (const auto& p : partitions_up_to(rows * cols))
    if (p.length() <= rows && p.largest() <= cols) out.push_back(p);
  return out;
}

Partition parse_partition(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  if (s.empty() || s == "∅" || s == "0" || s == "()") return Partition();
  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad partition '" + raw + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(parts);
  } catch (const InvalidPartition& e) {
    throw ParseError("bad partition '" + raw + "': " + e.what());
  }
}

std::vector<Partition> parse_partition_list(const std::string& s) {
  std::vector<Partition> out;
  size_t pos = 0;
  while (true) {
    size_t semi = s.find(';', pos);
    out.push_back(parse_partition(s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

}  // namespace hypstab
