#include "pr/coloring.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pr/errors.hpp"
#include "pr/rng.hpp"

namespace pr {

const char* color_name(Color c) { return c == Color::Blue ? "blue" : "red"; }

Coloring Coloring::table(std::uint32_t n, std::vector<Color> cells) {
  if (n > kMaxTableDim) throw std::invalid_argument("Coloring: explicit table needs N <= 24");
  if (cells.size() != (1ULL << n))
    throw std::invalid_argument("Coloring: table must have exactly 2^N cells");
  Coloring c;
  c.n_ = n;
  c.cells_ = std::move(cells);
  return c;
}

Coloring Coloring::oracle(std::uint32_t n, std::function<Color(const Vertex&)> fn,
                          std::optional<std::uint64_t> budget) {
  Coloring c;
  c.n_ = n;
  c.oracle_ = std::make_shared<OracleState>();
  c.oracle_->fn = std::move(fn);
  c.oracle_->budget = budget;
  return c;
}

Color Coloring::of(const Vertex& v) const {
  if (!v.empty() && v.max_member() >= n_)
    throw std::invalid_argument("Coloring: vertex outside the ambient lattice");
  if (is_table()) return cells_[v.mask()];
  std::lock_guard<std::mutex> lock(oracle_->mu);
  auto it = oracle_->memo.find(v);
  if (it != oracle_->memo.end()) return it->second;
  if (oracle_->budget && oracle_->used >= *oracle_->budget)
    throw BudgetExceeded("coloring oracle: query budget of " +
                         std::to_string(*oracle_->budget) + " exhausted");
  Color c = oracle_->fn(v);
  ++oracle_->used;
  oracle_->memo.emplace(v, c);
  return c;
}

Color Coloring::of_mask(std::uint64_t mask) const {
  if (!is_table()) throw std::logic_error("Coloring::of_mask: oracle mode");
  return cells_[mask];
}

std::uint64_t Coloring::oracle_queries() const {
  if (is_table()) return 0;
  std::lock_guard<std::mutex> lock(oracle_->mu);
  return oracle_->used;
}

std::optional<std::uint64_t> Coloring::query_budget() const {
  return is_table() ? std::nullopt : oracle_->budget;
}

Coloring Coloring::to_table() const {
  if (is_table()) return *this;
  if (n_ > kMaxTableDim) throw std::invalid_argument("Coloring::to_table: N too large");
  std::vector<Color> cells(1ULL << n_);
  for (std::uint64_t m = 0; m < cells.size(); ++m) cells[m] = of(Vertex::from_mask(m));
  return table(n_, std::move(cells));
}

Coloring Coloring::swapped() const {
  if (is_table()) {
    std::vector<Color> cells(cells_);
    for (Color& c : cells) c = opposite(c);
    return table(n_, std::move(cells));
  }
  Coloring inner = *this;
  return oracle(n_, [inner](const Vertex& v) { return opposite(inner.of(v)); });
}

const std::vector<Color>& Coloring::cells() const {
  if (!is_table()) throw std::logic_error("Coloring::cells: oracle mode");
  return cells_;
}

std::string Coloring::to_file_string() const {
  if (!is_table()) throw std::logic_error("Coloring file format requires explicit mode");
  std::string out = "N=" + std::to_string(n_) + "\n";
  out.reserve(out.size() + cells_.size() + 1);
  for (Color c : cells_) out += color_char(c);
  out += '\n';
  return out;
}

Coloring Coloring::parse(std::string_view text) {
  if (text.substr(0, 2) != "N=") throw std::invalid_argument("coloring file: expected 'N=<int>'");
  std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw std::invalid_argument("coloring file: missing cells line");
  std::uint32_t n = 0;
  auto num = text.substr(2, eol - 2);
  auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || p != num.data() + num.size())
    throw std::invalid_argument("coloring file: bad dimension");
  if (n > kMaxTableDim) throw std::invalid_argument("coloring file: N > 24 unsupported");
  std::string_view body = text.substr(eol + 1);
  std::uint64_t want = 1ULL << n;
  if (body.size() < want) throw std::invalid_argument("coloring file: too few cells");
  std::vector<Color> cells(want);
  for (std::uint64_t i = 0; i < want; ++i) {
    char ch = body[i];
    if (ch == 'B')
      cells[i] = Color::Blue;
    else if (ch == 'R')
      cells[i] = Color::Red;
    else
      throw std::invalid_argument("coloring file: cell characters must be B or R");
  }
  std::string_view rest = body.substr(want);
  if (!rest.empty() && rest != "\n")
    throw std::invalid_argument("coloring file: trailing garbage after cells");
  return table(n, std::move(cells));
}

Coloring Coloring::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open coloring file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void Coloring::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write coloring file: " + path);
  out << to_file_string();
}

Coloring constant_coloring(std::uint32_t n, Color c, std::optional<std::uint64_t> budget) {
  return Coloring::oracle(n, [c](const Vertex&) { return c; }, budget);
}

Coloring layered_coloring(std::uint32_t n, std::uint64_t threshold,
                          std::optional<std::uint64_t> budget) {
  return Coloring::oracle(
      n, [threshold](const Vertex& v) { return v.size() < threshold ? Color::Red : Color::Blue; },
      budget);
}

namespace {
Color seeded_color(std::uint64_t seed, const Vertex& v, double p_blue) {
  double u = unit_double(mix64(seed ^ v.stable_hash()));
  return u < p_blue ? Color::Blue : Color::Red;
}
}  // namespace

Coloring random_oracle(std::uint32_t n, std::uint64_t seed, double p_blue,
                       std::optional<std::uint64_t> budget) {
  return Coloring::oracle(
      n, [seed, p_blue](const Vertex& v) { return seeded_color(seed, v, p_blue); }, budget);
}

Coloring random_table(std::uint32_t n, std::uint64_t seed, double p_blue) {
  std::vector<Color> cells(1ULL << n);
  SplitMix rng(seed);
  for (Color& c : cells) c = rng.next_unit() < p_blue ? Color::Blue : Color::Red;
  return Coloring::table(n, std::move(cells));
}

Coloring make_oracle(std::string_view spec, std::uint32_t n, std::optional<std::uint64_t> budget) {
  if (spec == "all-blue") return constant_coloring(n, Color::Blue, budget);
  if (spec == "all-red") return constant_coloring(n, Color::Red, budget);
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  if (head == "layered" && colon != std::string_view::npos) {
    std::uint64_t th = std::stoull(std::string(spec.substr(colon + 1)));
    return layered_coloring(n, th, budget);
  }
  if (head == "random" && colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    auto colon2 = rest.find(':');
    std::uint64_t seed = std::stoull(rest.substr(0, colon2));
    double p_blue = 0.5;
    if (colon2 != std::string::npos) p_blue = std::stod(rest.substr(colon2 + 1));
    return random_oracle(n, seed, p_blue, budget);
  }
  throw std::invalid_argument("unknown oracle spec: " + std::string(spec));
}

}  // namespace pr
