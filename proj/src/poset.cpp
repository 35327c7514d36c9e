#include "pr/poset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "pr/lattice.hpp"

namespace pr {

FinitePoset FinitePoset::from_leq(std::uint32_t k, std::vector<std::uint8_t> leq) {
  if (leq.size() != static_cast<std::size_t>(k) * k)
    throw std::invalid_argument("FinitePoset: matrix size mismatch");
  auto at = [&](std::uint32_t a, std::uint32_t b) { return leq[a * k + b] != 0; };
  for (std::uint32_t a = 0; a < k; ++a)
    if (!at(a, a)) throw std::invalid_argument("FinitePoset: relation not reflexive");
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      if (a != b && at(a, b) && at(b, a))
        throw std::invalid_argument("FinitePoset: relation not antisymmetric");
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      if (at(a, b))
        for (std::uint32_t c = 0; c < k; ++c)
          if (at(b, c) && !at(a, c))
            throw std::invalid_argument("FinitePoset: relation not transitive");
  FinitePoset p;
  p.k_ = k;
  p.leq_ = std::move(leq);
  return p;
}

std::uint32_t FinitePoset::related_count(std::uint32_t e) const {
  std::uint32_t c = 0;
  for (std::uint32_t f = 0; f < k_; ++f)
    if (f != e && comparable(e, f)) ++c;
  return c;
}

std::uint32_t FinitePoset::downset_size(std::uint32_t e) const {
  std::uint32_t c = 0;
  for (std::uint32_t f = 0; f < k_; ++f)
    if (leq(f, e)) ++c;
  return c;
}

std::uint32_t FinitePoset::upset_size(std::uint32_t e) const {
  std::uint32_t c = 0;
  for (std::uint32_t f = 0; f < k_; ++f)
    if (leq(e, f)) ++c;
  return c;
}

std::vector<std::uint32_t> FinitePoset::search_order() const {
  std::vector<std::uint32_t> order;
  std::vector<bool> placed(k_, false);
  for (std::uint32_t step = 0; step < k_; ++step) {
    std::int64_t best = -1;
    std::uint32_t best_related = 0;
    for (std::uint32_t e = 0; e < k_; ++e) {
      if (placed[e]) continue;
      bool ready = true;
      for (std::uint32_t f = 0; f < k_ && ready; ++f)
        if (!placed[f] && strictly_less(f, e)) ready = false;
      if (!ready) continue;
      std::uint32_t rel = related_count(e);
      if (best < 0 || rel > best_related) {
        best = e;
        best_related = rel;
      }
    }
    order.push_back(static_cast<std::uint32_t>(best));
    placed[static_cast<std::uint32_t>(best)] = true;
  }
  return order;
}

namespace {

FinitePoset boolean_poset(std::uint32_t n) {
  if (n > 16) throw std::invalid_argument("boolean:n supported for n <= 16");
  std::uint32_t k = 1u << n;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      if ((a & ~b) == 0) leq[a * k + b] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

FinitePoset chain_poset(std::uint32_t k) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = a; b < k; ++b) leq[a * k + b] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

FinitePoset antichain_poset(std::uint32_t k) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a) leq[a * k + a] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

// 0 = bottom, 1..n = antichain, and for the diamond n+1 = top
FinitePoset fork_poset(std::uint32_t n) {
  std::uint32_t k = n + 1;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a) leq[a * k + a] = 1;
  for (std::uint32_t b = 1; b <= n; ++b) leq[0 * k + b] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

FinitePoset diamond_poset(std::uint32_t n) {
  std::uint32_t k = n + 2;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a) leq[a * k + a] = 1;
  for (std::uint32_t b = 1; b <= n; ++b) {
    leq[0 * k + b] = 1;
    leq[b * k + (n + 1)] = 1;
  }
  leq[0 * k + (n + 1)] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

FinitePoset truncated_poset(std::uint32_t n, std::uint32_t s, std::uint32_t t) {
  auto elems = truncated_lattice_elements(n, s, t);
  std::uint32_t k = static_cast<std::uint32_t>(elems.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      if (elems[a].subset_of(elems[b])) leq[a * k + b] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    parts.emplace_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::uint32_t parse_u32(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument(std::string("make_poset: bad ") + what + ": " + s);
  return v;
}

}  // namespace

std::vector<Vertex> truncated_lattice_elements(std::uint32_t n, std::uint32_t s, std::uint32_t t) {
  if (!(s <= t && t <= n)) throw std::invalid_argument("truncated:n:s:t needs 0 <= s <= t <= n");
  std::vector<Vertex> elems;
  for (std::uint32_t level = s; level <= t; ++level)
    for (const Vertex& v : layer(GroundSet{n}, level)) elems.push_back(v);
  return elems;
}

FinitePoset make_poset(std::string_view spec) {
  if (spec.substr(0, 5) == "file:")  // the rest is a path, colons and all
    return poset_from_file(std::string(spec.substr(5)));
  auto parts = split(spec, ':');
  const std::string& head = parts[0];
  if (head == "boolean" && parts.size() == 2) return boolean_poset(parse_u32(parts[1], "n"));
  if (head == "chain" && parts.size() == 2) {
    std::uint32_t k = parse_u32(parts[1], "k");
    if (k == 0) throw std::invalid_argument("chain:k needs k >= 1");
    return chain_poset(k);
  }
  if (head == "antichain" && parts.size() == 2) {
    std::uint32_t k = parse_u32(parts[1], "k");
    if (k == 0) throw std::invalid_argument("antichain:k needs k >= 1");
    return antichain_poset(k);
  }
  if (head == "fork" && parts.size() == 2) {
    std::uint32_t n = parse_u32(parts[1], "n");
    if (n == 0) throw std::invalid_argument("fork:n needs n >= 1");
    return fork_poset(n);
  }
  if (head == "diamond" && parts.size() == 2) {
    std::uint32_t n = parse_u32(parts[1], "n");
    if (n == 0) throw std::invalid_argument("diamond:n needs n >= 1");
    return diamond_poset(n);
  }
  if (head == "truncated" && parts.size() == 4)
    return truncated_poset(parse_u32(parts[1], "n"), parse_u32(parts[2], "s"),
                           parse_u32(parts[3], "t"));
  throw std::invalid_argument("make_poset: unrecognized spec: " + std::string(spec));
}

FinitePoset poset_from_relations(
    std::uint32_t k, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rels) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(k) * k, 0);
  for (std::uint32_t a = 0; a < k; ++a) leq[a * k + a] = 1;
  for (auto [i, j] : rels) {
    if (i >= k || j >= k) throw std::invalid_argument("poset relations: element out of range");
    leq[i * k + j] = 1;
  }
  // transitive closure (Floyd-Warshall)
  for (std::uint32_t b = 0; b < k; ++b)
    for (std::uint32_t a = 0; a < k; ++a)
      if (leq[a * k + b])
        for (std::uint32_t c = 0; c < k; ++c)
          if (leq[b * k + c]) leq[a * k + c] = 1;
  return FinitePoset::from_leq(k, std::move(leq));
}

FinitePoset poset_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open poset file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.substr(0, 2) != "k=")
    throw std::invalid_argument("poset file: expected 'k=<int>' on line 1");
  std::uint32_t k = parse_u32(line.substr(2), "k");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rels;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto lt = line.find('<');
    if (lt == std::string::npos)
      throw std::invalid_argument("poset file: relation lines look like 'i<j'");
    rels.emplace_back(parse_u32(line.substr(0, lt), "i"), parse_u32(line.substr(lt + 1), "j"));
  }
  return poset_from_relations(k, rels);
}

namespace {

// invariant signature used to pre-partition elements before backtracking
std::vector<std::uint64_t> iso_signature(const FinitePoset& p) {
  std::uint32_t k = p.size();
  std::vector<std::uint64_t> sig(k);
  for (std::uint32_t e = 0; e < k; ++e)
    sig[e] = (std::uint64_t(p.downset_size(e)) << 32) | p.upset_size(e);
  // refine once by the multiset of neighbor signatures
  std::vector<std::uint64_t> refined(k);
  for (std::uint32_t e = 0; e < k; ++e) {
    std::vector<std::uint64_t> nb;
    for (std::uint32_t f = 0; f < k; ++f)
      if (f != e && p.comparable(e, f)) nb.push_back(sig[f]);
    std::sort(nb.begin(), nb.end());
    std::uint64_t h = sig[e];
    for (std::uint64_t x : nb) h = h * 0x9e3779b97f4a7c15ULL + x + 1;
    refined[e] = h;
  }
  return refined;
}

bool iso_backtrack(const FinitePoset& a, const FinitePoset& b,
                   const std::vector<std::uint64_t>& sa, const std::vector<std::uint64_t>& sb,
                   std::vector<std::int64_t>& match, std::vector<bool>& used, std::uint32_t e) {
  std::uint32_t k = a.size();
  if (e == k) return true;
  for (std::uint32_t f = 0; f < k; ++f) {
    if (used[f] || sa[e] != sb[f]) continue;
    bool ok = true;
    for (std::uint32_t e2 = 0; e2 < e && ok; ++e2) {
      std::uint32_t f2 = static_cast<std::uint32_t>(match[e2]);
      if (a.leq(e, e2) != b.leq(f, f2) || a.leq(e2, e) != b.leq(f2, f)) ok = false;
    }
    if (!ok) continue;
    match[e] = f;
    used[f] = true;
    if (iso_backtrack(a, b, sa, sb, match, used, e + 1)) return true;
    used[f] = false;
    match[e] = -1;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 12) throw std::invalid_argument("poset_isomorphic: exact test limited to |P| <= 12");
  auto sa = iso_signature(a);
  auto sb = iso_signature(b);
  auto sa_sorted = sa;
  auto sb_sorted = sb;
  std::sort(sa_sorted.begin(), sa_sorted.end());
  std::sort(sb_sorted.begin(), sb_sorted.end());
  if (sa_sorted != sb_sorted) return false;
  std::vector<std::int64_t> match(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return iso_backtrack(a, b, sa, sb, match, used, 0);
}

}  // namespace pr
