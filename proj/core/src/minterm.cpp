#include "lfikit/minterm.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lfikit {

TruthTable TruthTable::make(int width, std::int8_t fill) {
  if (width < 0 || width > 8) throw std::invalid_argument("table width out of range (0..8)");
  TruthTable t;
  t.width = width;
  t.out.assign(std::size_t{1} << width, fill);
  return t;
}

TruthTable load_truth_table(std::istream& in) {
  std::string line;
  int width = -1;
  std::vector<std::pair<unsigned, std::int8_t>> rows;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'bits -> bit'");
    auto bits_of = [&](std::string_view s) {
      std::string b;
      for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (c != '0' && c != '1')
          throw std::invalid_argument("line " + std::to_string(lineno) + ": bad bit '" +
                                      std::string(1, c) + "'");
        b += c;
      }
      return b;
    };
    std::string in_bits = bits_of(std::string_view(line).substr(0, arrow));
    std::string out_bits = bits_of(std::string_view(line).substr(arrow + 2));
    if (in_bits.empty() || out_bits.size() != 1)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'bits -> bit'");
    if (width < 0) width = static_cast<int>(in_bits.size());
    if (static_cast<int>(in_bits.size()) != width)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": width mismatch");
    unsigned input = 0;
    for (char c : in_bits) input = (input << 1) | static_cast<unsigned>(c - '0');
    rows.emplace_back(input, static_cast<std::int8_t>(out_bits[0] - '0'));
  }
  if (width < 0) throw std::invalid_argument("empty truth table");
  TruthTable t = TruthTable::make(width);
  for (auto [input, v] : rows) {
    if (t.out[input] >= 0 && t.out[input] != v)
      throw std::invalid_argument("conflicting rows for the same input");
    t.out[input] = v;
  }
  return t;
}

TruthTable parse_truth_table(const std::string& text) {
  std::istringstream in(text);
  return load_truth_table(in);
}

namespace {

BoolExpr product_term(int width, unsigned value, unsigned dash) {
  BoolExpr term = BoolExpr::constant(true);
  bool first = true;
  for (int i = 0; i < width; ++i) {
    unsigned bit = unsigned{1} << (width - 1 - i);  // variable i is the leftmost bit
    if (dash & bit) continue;
    BoolExpr lit = BoolExpr::var(i);
    if (!(value & bit)) lit = BoolExpr::bnot(std::move(lit));
    term = first ? std::move(lit) : BoolExpr::band(std::move(term), std::move(lit));
    first = false;
  }
  return term;
}

BoolExpr sum_of(const std::vector<BoolExpr>& terms) {
  if (terms.empty()) return BoolExpr::constant(false);
  BoolExpr e = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) e = BoolExpr::bor(e, terms[i]);
  return e;
}

}  // namespace

BoolExpr synthesize_minterms(const TruthTable& t) {
  std::vector<BoolExpr> terms;
  for (unsigned input = 0; input < t.rows(); ++input)
    if (t.at(input) == 1) terms.push_back(product_term(t.width, input, 0));
  BoolExpr e = sum_of(terms);
  if (!agrees(e, t)) throw std::logic_error("synthesize_minterms: self-check failed");
  return e;
}

namespace {

struct Implicant {
  unsigned value, dash;
  bool operator<(const Implicant& o) const {
    return value < o.value || (value == o.value && dash < o.dash);
  }
  bool covers(unsigned input) const { return (input & ~dash) == (value & ~dash); }
};

}  // namespace

BoolExpr minimize_sop(const TruthTable& t) {
  std::vector<unsigned> ones, cares;
  for (unsigned input = 0; input < t.rows(); ++input) {
    if (t.at(input) == 1) ones.push_back(input);
    if (t.at(input) != 0) cares.push_back(input);  // 1-rows plus don't-cares
  }
  if (ones.empty()) return BoolExpr::constant(false);

  // Merge pass: combine implicants differing in exactly one cared bit.
  std::set<Implicant> current;
  for (unsigned input : cares) current.insert({input, 0});
  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::set<Implicant> next;
    std::set<Implicant> merged;
    std::vector<Implicant> level(current.begin(), current.end());
    for (std::size_t i = 0; i < level.size(); ++i)
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (level[i].dash != level[j].dash) continue;
        unsigned diff = level[i].value ^ level[j].value;
        if (__builtin_popcount(diff) != 1) continue;
        next.insert({level[i].value & ~diff, level[i].dash | diff});
        merged.insert(level[i]);
        merged.insert(level[j]);
      }
    for (const Implicant& im : level)
      if (!merged.contains(im)) primes.push_back(im);
    current = std::move(next);
  }
  std::sort(primes.begin(), primes.end());

  // Greedy cover of the 1-rows (essential implicants fall out automatically).
  std::set<unsigned> uncovered(ones.begin(), ones.end());
  std::vector<Implicant> chosen;
  while (!uncovered.empty()) {
    std::size_t best = primes.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      std::size_t gain = 0;
      for (unsigned input : uncovered)
        if (primes[i].covers(input)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == primes.size()) throw std::logic_error("minimize_sop: cover failed");
    chosen.push_back(primes[best]);
    for (auto it = uncovered.begin(); it != uncovered.end();)
      it = primes[best].covers(*it) ? uncovered.erase(it) : std::next(it);
  }

  std::vector<BoolExpr> terms;
  for (const Implicant& im : chosen) terms.push_back(product_term(t.width, im.value, im.dash));
  BoolExpr e = sum_of(terms);
  if (!agrees(e, t)) throw std::logic_error("minimize_sop: self-check failed");
  return e;
}

bool agrees(const BoolExpr& e, const TruthTable& t) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(t.width));
  for (unsigned input = 0; input < t.rows(); ++input) {
    if (t.at(input) < 0) continue;
    for (int i = 0; i < t.width; ++i)
      bits[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((input >> (t.width - 1 - i)) & 1);
    if (e.eval(bits) != (t.at(input) == 1)) return false;
  }
  return true;
}

}  // namespace lfikit
