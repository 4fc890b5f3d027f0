#include "lfikit/logics.hpp"

#include <map>
#include <mutex>

#include "lfikit/parser.hpp"
#include "lfikit/structures.hpp"

namespace lfikit {

LogicId LogicId::named(Name n) {
  if (n == Name::Param) throw std::invalid_argument("named() needs a concrete name");
  return LogicId{n, -1, -1};
}

LogicId LogicId::param(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("L:n,k needs n, k >= 0");
  if (n == 0 && k == 0) return named(Name::mbCci);
  if (n == 0 && k == 1) return named(Name::Cie);
  return LogicId{Name::Param, n, k};
}

std::optional<LogicId> LogicId::parse(std::string_view text) {
  if (text == "mbC") return named(Name::mbC);
  if (text == "mbCciw") return named(Name::mbCciw);
  if (text == "mbCci") return named(Name::mbCci);
  if (text == "Cie") return named(Name::Cie);
  if (text == "Cbr") return named(Name::Cbr);
  if (text == "LFI1") return named(Name::LFI1);
  if (text == "LFI3") return named(Name::LFI3);
  if (text == "CPL") return named(Name::CPL);
  if (text.starts_with("L:")) {
    std::string_view rest = text.substr(2);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    int n = -1, k = -1;
    try {
      std::size_t used = 0;
      n = std::stoi(std::string(rest.substr(0, comma)), &used);
      if (used != comma) return std::nullopt;
      std::string ks(rest.substr(comma + 1));
      k = std::stoi(ks, &used);
      if (used != ks.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (n < 0 || k < 0) return std::nullopt;
    return param(n, k);
  }
  return std::nullopt;
}

std::string LogicId::str() const {
  switch (name) {
    case Name::mbC: return "mbC";
    case Name::mbCciw: return "mbCciw";
    case Name::mbCci: return "mbCci";
    case Name::Cie: return "Cie";
    case Name::Cbr: return "Cbr";
    case Name::LFI1: return "LFI1";
    case Name::LFI3: return "LFI3";
    case Name::CPL: return "CPL";
    case Name::Param: return "L:" + std::to_string(n) + "," + std::to_string(k);
  }
  return "?";
}

const AxiomSchema* LogicSpec::find_axiom(std::string_view id) const {
  for (const AxiomSchema& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

namespace {

AxiomSchema make_schema(std::string id, std::string display, const std::string& text) {
  return {std::move(id), std::move(display), parse(text)};
}

AxiomSchema make_schema(std::string id, std::string display, Formula f) {
  return {std::move(id), std::move(display), std::move(f)};
}

std::vector<AxiomSchema> cpl_plus() {
  return {
      make_schema("Ax1", "Ax1", "alpha -> (beta -> alpha)"),
      make_schema("Ax2", "Ax2", "(alpha -> (beta -> gamma)) -> ((alpha -> beta) -> (alpha -> gamma))"),
      make_schema("Ax3", "Ax3", "alpha -> (beta -> (alpha & beta))"),
      make_schema("Ax4", "Ax4", "(alpha & beta) -> alpha"),
      make_schema("Ax5", "Ax5", "(alpha & beta) -> beta"),
      make_schema("Ax6", "Ax6", "alpha -> (alpha | beta)"),
      make_schema("Ax7", "Ax7", "beta -> (alpha | beta)"),
      make_schema("Ax8", "Ax8", "(alpha -> gamma) -> ((beta -> gamma) -> ((alpha | beta) -> gamma))"),
      make_schema("Ax9", "Ax9", "(alpha -> beta) | alpha"),
  };
}

AxiomSchema cc_schema(int n) {
  std::string id = n == 0 ? "cc" : "cc^" + std::to_string(n);
  return make_schema(id, "(" + id + ")", circ_tower(Formula::atom("alpha"), n + 2));
}

AxiomSchema ip_schema(int j) {
  Formula a = Formula::atom("alpha");
  std::string id = "ip^" + std::to_string(j);
  return make_schema(id, "(" + id + ")",
                     iff(Formula::neg(circ_tower(Formula::neg(a), j)),
                         Formula::neg(circ_tower(a, j))));
}

std::vector<AxiomSchema> mbc_axioms() {
  auto axioms = cpl_plus();
  axioms.push_back(make_schema("TND", "(TND)", "alpha | ~alpha"));
  axioms.push_back(make_schema("bc1", "(bc1)", "o alpha -> (alpha -> (~alpha -> beta))"));
  return axioms;
}

std::vector<AxiomSchema> mbcciw_axioms() {
  auto axioms = mbc_axioms();
  axioms.push_back(make_schema("ciw", "(ciw)", "o alpha | (alpha & ~alpha)"));
  return axioms;
}

void add_dn(std::vector<AxiomSchema>& axioms) {
  axioms.push_back(make_schema("cf", "(cf)", "~~alpha -> alpha"));
  axioms.push_back(make_schema("ce", "(ce)", "alpha -> ~~alpha"));
}

std::vector<AxiomSchema> lnk_axioms(int n, int k) {
  auto axioms = mbcciw_axioms();
  axioms.push_back(cc_schema(n));
  if (k >= 1) add_dn(axioms);
  for (int j = 1; j <= k - 1; ++j) axioms.push_back(ip_schema(j));
  return axioms;
}

std::vector<AxiomSchema> lfi3_extra() {
  Formula a = Formula::atom("alpha");
  Formula b = Formula::atom("beta");
  auto neg = [](Formula f) { return Formula::neg(std::move(f)); };
  auto circ = [](Formula f) { return Formula::circ(std::move(f)); };
  auto land = [](Formula l, Formula r) { return Formula::conj(std::move(l), std::move(r)); };
  auto lor = [](Formula l, Formula r) { return Formula::disj(std::move(l), std::move(r)); };

  Formula a1 = iff(neg(land(a, b)), lor(neg(a), neg(b)));
  Formula a2 = iff(neg(lor(a, b)), land(neg(a), neg(b)));
  Formula a3 = iff(neg(Formula::imp(a, b)),
                   land(neg(b), lor(strong_neg(neg(a)), neg(circ(a)))));
  Formula a4 = iff(neg(circ(land(a, b))),
                   lor(lor(land(strong_neg(neg(a)), neg(circ(b))),
                           land(neg(circ(a)), strong_neg(neg(b)))),
                       land(neg(circ(a)), neg(circ(b)))));
  Formula a5 = iff(neg(circ(lor(a, b))),
                   lor(lor(land(strong_neg(a), neg(circ(b))),
                           land(neg(circ(a)), strong_neg(b))),
                       land(neg(circ(a)), neg(circ(b)))));
  Formula a6 = iff(neg(circ(Formula::imp(a, b))),
                   lor(lor(lor(land(strong_neg(neg(a)), neg(circ(b))),
                               land(land(strong_neg(neg(a)), neg(circ(a))), strong_neg(b))),
                           land(neg(circ(a)), neg(circ(b)))),
                       land(land(strong_neg(a), neg(circ(a))), strong_neg(b))));

  return {make_schema("A1", "A1", a1), make_schema("A2", "A2", a2),
          make_schema("A3", "A3", a3), make_schema("A4", "A4", a4),
          make_schema("A5", "A5", a5), make_schema("A6", "A6", a6)};
}

std::vector<AxiomSchema> lfi3_axioms() {
  auto axioms = lnk_axioms(1, 2);
  for (AxiomSchema& s : lfi3_extra()) axioms.push_back(std::move(s));
  return axioms;
}

std::vector<AxiomSchema> lfi1_axioms() {
  auto axioms = lfi3_axioms();
  axioms.push_back(cc_schema(0));
  return axioms;
}

std::vector<AxiomSchema> cpl_axioms() {
  auto axioms = lfi1_axioms();
  axioms.push_back(make_schema("co", "(co)", "o alpha"));
  return axioms;
}

std::string rn_name(int n, int k) {
  return "R_" + std::to_string(n) + "^" + std::to_string(k);
}

Semantics rn_semantics(int n, int k) {
  std::vector<Restriction> rs{Restriction::cc(n)};
  for (int j = 1; j <= k - 1; ++j) rs.push_back(Restriction::ip(j));
  auto base = k == 0 ? m0_nmatrix() : m1_nmatrix();
  return Semantics::rnmatrix(rn_name(n, k), base, std::move(rs));
}

LogicSpec build_logic(const LogicId& id) {
  using Name = LogicId::Name;
  LogicSpec spec;
  spec.id = id;
  switch (id.name) {
    case Name::mbC:
      spec.axioms = mbc_axioms();
      break;
    case Name::mbCciw:
      spec.axioms = mbcciw_axioms();
      spec.semantics = {Semantics::nmatrix("M_0", m0_nmatrix())};
      break;
    case Name::mbCci:
      spec.axioms = lnk_axioms(0, 0);
      spec.semantics = {Semantics::nmatrix("N_0^0", mbcci_nmatrix()), rn_semantics(0, 0)};
      break;
    case Name::Cie:
      spec.axioms = lnk_axioms(0, 1);
      spec.semantics = {Semantics::nmatrix("N_0^1", cie_nmatrix()), rn_semantics(0, 1)};
      break;
    case Name::Cbr:
      spec.axioms = mbcciw_axioms();
      add_dn(spec.axioms);
      spec.semantics = {Semantics::nmatrix("M_1", m1_nmatrix())};
      break;
    case Name::LFI3:
      spec.axioms = lfi3_axioms();
      spec.semantics = {Semantics::plain_matrix("M_2", lfi3_matrix())};
      break;
    case Name::LFI1:
      spec.axioms = lfi1_axioms();
      spec.semantics = {Semantics::plain_matrix("M_LFI1", lfi1_matrix())};
      break;
    case Name::CPL:
      spec.axioms = cpl_axioms();
      spec.semantics = {Semantics::plain_matrix("M_CPL", cpl_matrix())};
      break;
    case Name::Param: {
      spec.axioms = lnk_axioms(id.n, id.k);
      if (id.n == 1 && id.k <= 2) {
        std::string nm = "M_1^" + std::to_string(id.k);
        spec.semantics.push_back(Semantics::nmatrix(nm, swap5_nmatrix(id.k)));
      }
      spec.semantics.push_back(rn_semantics(id.n, id.k));
      break;
    }
  }
  return spec;
}

}  // namespace

const LogicSpec& get_logic(const LogicId& id) {
  static std::mutex mu;
  static std::map<std::string, LogicSpec> cache;
  std::scoped_lock lock(mu);
  auto key = id.str();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_logic(id)).first;
  return it->second;
}

std::optional<SemPreference> parse_preference(std::string_view text) {
  if (text == "matrix") return SemPreference::Matrix;
  if (text == "nmatrix") return SemPreference::Nmatrix;
  if (text == "rnmatrix") return SemPreference::RNmatrix;
  if (text == "any") return SemPreference::Any;
  return std::nullopt;
}

std::optional<Semantics> semantics_of(const LogicSpec& spec, SemPreference pref) {
  if (spec.semantics.empty()) return std::nullopt;
  if (pref == SemPreference::Any) return spec.semantics.front();
  SemKind want = pref == SemPreference::Matrix    ? SemKind::Matrix
                 : pref == SemPreference::Nmatrix ? SemKind::Nmatrix
                                                  : SemKind::RNmatrix;
  for (const Semantics& s : spec.semantics)
    if (s.kind == want) return s;
  return std::nullopt;
}

std::vector<AxiomInstance> axiom_instances(const LogicSpec& spec,
                                           std::span<const Formula> pool) {
  if (pool.empty()) throw std::invalid_argument("axiom_instances: empty argument pool");
  std::vector<AxiomInstance> out;
  for (const AxiomSchema& ax : spec.axioms) {
    std::vector<std::string> vars = atoms_of(ax.schema);
    std::vector<std::size_t> pick(vars.size(), 0);
    while (true) {
      Substitution subst;
      for (std::size_t i = 0; i < vars.size(); ++i) subst.insert_or_assign(vars[i], pool[pick[i]]);
      out.push_back({ax.id, instantiate(ax.schema, subst)});
      // odometer over pool^#vars
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < pool.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return out;
}

std::vector<AxiomInstance> axiom_instances(const LogicSpec& spec,
                                           std::span<const std::string> atoms, int depth) {
  auto pool = enumerate_formulas(atoms, depth, (1 << depth) - 1);
  return axiom_instances(spec, pool);
}

std::vector<std::string> known_logic_names() {
  return {"mbC", "mbCciw", "mbCci", "Cie", "Cbr", "LFI1", "LFI3", "CPL", "L:n,k"};
}

}  // namespace lfikit
