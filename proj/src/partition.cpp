#include "glnq/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace glnq {

Partition::Partition(std::vector<unsigned> p) {
  p.erase(std::remove(p.begin(), p.end(), 0u), p.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  parts = std::move(p);
}

unsigned Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

unsigned Partition::multiplicity(unsigned i) const {
  return static_cast<unsigned>(std::count(parts.begin(), parts.end(), i));
}

unsigned Partition::n_statistic() const {
  unsigned s = 0;
  for (unsigned i = 0; i < parts.size(); ++i) s += i * parts[i];
  return s;
}

unsigned Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

Partition conjugate(const Partition& lambda) {
  std::vector<unsigned> c;
  if (lambda.empty()) return Partition();
  for (unsigned j = 1; j <= lambda.parts.front(); ++j) {
    unsigned len = 0;
    for (unsigned p : lambda.parts) len += p >= j ? 1 : 0;
    c.push_back(len);
  }
  return Partition(c);
}

bool dominates(const Partition& lambda, const Partition& mu) {
  const unsigned len = std::max(lambda.length(), mu.length());
  unsigned sl = 0, sm = 0;
  for (unsigned k = 1; k <= len; ++k) {
    sl += lambda.part(k);
    sm += mu.part(k);
    if (sm > sl) return false;
  }
  return true;
}

namespace {

// Assigns items (largest first) to bins with given remaining capacities; every
// bin must end exactly full.
bool pack(const std::vector<unsigned>& items, std::size_t next, std::vector<unsigned>& room,
          std::map<std::pair<std::size_t, std::vector<unsigned>>, bool>& memo) {
  if (next == items.size()) {
    return std::all_of(room.begin(), room.end(), [](unsigned r) { return r == 0; });
  }
  std::vector<unsigned> key = room;
  std::sort(key.begin(), key.end());
  auto found = memo.find({next, key});
  if (found != memo.end()) return found->second;
  bool ok = false;
  for (std::size_t b = 0; b < room.size() && !ok; ++b) {
    if (room[b] < items[next]) continue;
    // Bins with equal remaining room are interchangeable.
    bool seen = false;
    for (std::size_t c = 0; c < b; ++c) seen = seen || room[c] == room[b];
    if (seen) continue;
    room[b] -= items[next];
    ok = pack(items, next + 1, room, memo);
    room[b] += items[next];
  }
  memo[{next, key}] = ok;
  return ok;
}

}  // namespace

bool refines(const Partition& mu, const Partition& lambda) {
  const unsigned sm = mu.size(), sl = lambda.size();
  if (sm > sl) return false;
  std::vector<unsigned> items = mu.parts;
  items.insert(items.end(), sl - sm, 1u);
  std::vector<unsigned> room = lambda.parts;
  std::map<std::pair<std::size_t, std::vector<unsigned>>, bool> memo;
  return pack(items, 0, room, memo);
}

bool pair_precedes(const PairType& a, const PairType& b) {
  return refines(b.first, a.first) && dominates(b.second, a.second);
}

bool pair_strictly_precedes(const PairType& a, const PairType& b) {
  return !(a == b) && pair_precedes(a, b);
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> all_compositions(unsigned n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(unsigned)> rec = [&](unsigned rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = 1; p <= rest; ++p) {
      cur.parts.push_back(p);
      rec(rest - p);
      cur.parts.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

namespace {

std::string join(const std::vector<unsigned>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<unsigned> split(const std::string& text) {
  std::vector<unsigned> v;
  if (text == "-" || text.empty()) return v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::Parse, "bad list '" + text + "'");
    }
    const unsigned long value = std::stoul(item);
    if (value == 0 || value > 64) throw Error(ErrorCode::Parse, "part out of range in '" + text + "'");
    v.push_back(static_cast<unsigned>(value));
  }
  return v;
}

}  // namespace

std::string to_string(const Partition& lambda) { return join(lambda.parts); }

Partition parse_partition(const std::string& text) {
  std::vector<unsigned> v = split(text);
  if (!std::is_sorted(v.begin(), v.end(), std::greater<>())) {
    throw Error(ErrorCode::Parse, "partition parts must be weakly decreasing: '" + text + "'");
  }
  return Partition(v);
}

std::string to_string(const Composition& rho) { return join(rho.parts); }

Composition parse_composition(const std::string& text) { return Composition{split(text)}; }

std::string to_string(const PairType& t) {
  return "(" + to_string(t.first) + "|" + to_string(t.second) + ")";
}

}  // namespace glnq
