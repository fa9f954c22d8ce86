#include "smeared/document.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "smeared/linalg.hpp"
#include "smeared/parse.hpp"
#include "smeared/version.hpp"

namespace smeared::cli {

namespace {

// ---------------------------------------------------------------------------
// JSON <-> domain values

std::string str(const Polynomial& p) { return p.to_string(); }

json polys_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(str(p));
  return out;
}

json rats_json(const std::vector<Rational>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(r.to_string());
  return out;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ProblemError(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) throw ProblemError(where, "expected a string");
  return j.get<std::string>();
}

Polynomial poly_at(const json& j, const RingPtr& ring, const std::string& where) {
  const std::string text = string_at(j, where);
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    throw ProblemError(where, e.what());
  }
}

std::vector<Polynomial> polys_at(const json& j, const RingPtr& ring, const std::string& where) {
  if (!j.is_array()) throw ProblemError(where, "expected an array of polynomial strings");
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(poly_at(j[k], ring, where + "[" + std::to_string(k) + "]"));
  return out;
}

Rational rational_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  const std::string text = string_at(j, where);
  try {
    return Rational::from_string(text);
  } catch (const ParseError& e) {
    throw ProblemError(where, e.what());
  }
}

std::vector<Rational> rationals_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ProblemError(where, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(rational_at(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::size_t count_at(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ProblemError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

// 1-based in documents, 0-based in the library.
std::size_t index_at(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer()) throw ProblemError(where, "expected an ideal index");
  const long long i = j.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n)
    throw ProblemError(where, "ideal index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(i - 1);
}

std::string order_name(MonomialOrder o) {
  switch (o.kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Block: return "block";
  }
  return "grevlex";
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const ProblemError*>(&e)) return "bad_query";
  if (dynamic_cast<const RingMismatch*>(&e)) return "ring_mismatch";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "dimension_mismatch";
  if (dynamic_cast<const NotMember*>(&e)) return "not_member";
  if (dynamic_cast<const HypothesisFailure*>(&e)) return "hypothesis_failure";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const InternalError*>(&e)) return "internal";
  return "error";
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations) {
    json ids = json::array();
    for (auto i : v.ideals) ids.push_back(i + 1);
    out.push_back({{"kind", to_string(v.kind)}, {"ideals", ids}, {"message", v.message}});
  }
  return out;
}

std::vector<Polynomial> concat(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Certificate checks shared by run (self-check) and verify.

class Checker {
 public:
  Checker(const Problem& problem, VerifyOutcome& out) : problem_(problem), out_(out) {}

  void expect(bool cond, const std::string& what) {
    ++out_.checks;
    if (!cond) out_.failures.push_back(where_ + ": " + what);
  }

  void at(std::string where) { where_ = std::move(where); }

  const RingPtr& ring() const { return problem_.ring; }
  const Ideal& ideal(std::size_t i) const { return problem_.config.ideals.at(i); }
  std::size_t n() const { return problem_.config.ideals.size(); }

  // sum_j cofactors[j] * gens[j] == target
  void combination(const Polynomial& target, const std::vector<Polynomial>& gens, const json& cofactors,
                   const std::string& what) {
    if (!cofactors.is_array() || cofactors.size() != gens.size()) {
      expect(false, what + ": wrong number of cofactors");
      return;
    }
    Polynomial sum(ring());
    for (std::size_t j = 0; j < gens.size(); ++j) sum += poly_at(cofactors[j], ring(), where_) * gens[j];
    expect(sum == target, what + ": cofactor identity does not hold");
  }

  // f - alpha_i in I_i for every i.
  void membership(const Polynomial& f, const json& payload) {
    const json& cof = field(payload, "cofactors", where_);
    if (payload.at("member").get<bool>()) {
      const auto alpha = rationals_at(field(payload, "alpha", where_), where_);
      expect(alpha.size() == n() && cof.size() == n(), "alpha/cofactor count differs from the number of ideals");
      if (alpha.size() != n() || cof.size() != n()) return;
      for (std::size_t i = 0; i < n(); ++i)
        combination(f - Polynomial::constant(ring(), alpha[i]), ideal(i).generators(), cof[i],
                    "f - alpha_" + std::to_string(i + 1) + " in I_" + std::to_string(i + 1));
    } else {
      const std::size_t w = index_at(field(payload, "witness_ideal", where_), n(), where_);
      const Polynomial r = poly_at(field(payload, "remainder", where_), ring(), where_);
      combination(f - r, ideal(w).generators(), cof, "f - remainder in the witness ideal");
      expect(!r.is_constant(), "witness remainder is constant");
      // r is a normal form, so r - c is never in the ideal for constant c.
      expect(ideal(w).normal_form(r) == r, "witness remainder is not in normal form");
    }
  }

 private:
  const Problem& problem_;
  VerifyOutcome& out_;
  std::string where_;
};

json membership_payload(const SmearedRing& R, const Polynomial& f) {
  const MembershipCertificate cert = R.member(f);
  json out{{"member", cert.member}};
  json cof = json::array();
  if (cert.member) {
    out["alpha"] = rats_json(cert.constants);
    for (std::size_t i = 0; i < R.num_ideals(); ++i) {
      auto c = R.ideal(i).membership_cofactors(f - Polynomial::constant(R.ring(), cert.constants[i]));
      if (!c) throw InternalError("member certificate without ideal cofactors");
      cof.push_back(polys_json(*c));
    }
  } else {
    out["witness_ideal"] = *cert.witness_index + 1;
    out["remainder"] = str(*cert.nonconstant_remainder);
    auto c = R.ideal(*cert.witness_index).membership_cofactors(f - *cert.nonconstant_remainder);
    if (!c) throw InternalError("normal form difference not in the ideal");
    cof = polys_json(*c);
  }
  out["cofactors"] = cof;
  return out;
}

// ---------------------------------------------------------------------------
// Query normalization

const std::vector<std::string> kQueryKinds = {"validate", "member",  "eval",  "partition", "chain",
                                              "dims",     "verdict", "locus", "basis",     "constancy"};

}  // namespace

json parse_query_string(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  std::string kind;
  in >> kind;
  std::string rest;
  std::getline(in, rest);
  const auto b = rest.find_first_not_of(" \t");
  rest = b == std::string::npos ? "" : rest.substr(b);
  std::vector<std::string> tokens;
  {
    std::istringstream t(rest);
    for (std::string tok; t >> tok;) tokens.push_back(tok);
  }
  auto need = [&](std::size_t k) {
    if (tokens.size() != k)
      throw ProblemError(where, "query '" + kind + "' expects " + std::to_string(k) + " argument(s)");
  };
  auto integer = [&](const std::string& s) -> json {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ProblemError(where, "expected an integer, got '" + s + "'");
    }
  };
  if (kind == "validate" || kind == "dims" || kind == "verdict") {
    need(0);
    return {{"query", kind}};
  }
  if (kind == "member") {
    if (rest.empty()) throw ProblemError(where, "query 'member' expects a polynomial");
    return {{"query", kind}, {"poly", rest}};
  }
  if (kind == "eval") {
    const auto cut = rest.find_last_of(" \t");
    if (cut == std::string::npos) throw ProblemError(where, "query 'eval' expects <poly> <i>");
    std::string poly = rest.substr(0, cut);
    poly = poly.substr(0, poly.find_last_not_of(" \t") + 1);
    return {{"query", kind}, {"poly", poly}, {"index", integer(rest.substr(cut + 1))}};
  }
  if (kind == "partition") {
    need(1);
    return {{"query", kind}, {"index", integer(tokens[0])}};
  }
  if (kind == "chain") {
    need(2);
    return {{"query", kind}, {"index", integer(tokens[0])}, {"length", integer(tokens[1])}};
  }
  if (kind == "basis") {
    need(1);
    return {{"query", kind}, {"degree", integer(tokens[0])}};
  }
  if (kind == "locus") {
    json pt = json::array();
    for (const auto& t : tokens) pt.push_back(t);
    return {{"query", kind}, {"point", pt}};
  }
  if (kind == "constancy") throw ProblemError(where, "query 'constancy' must be given as an object");
  throw ProblemError(where, "unknown query '" + kind + "'");
}

namespace {

json normalize_query(const json& q, const std::string& where) {
  if (q.is_string()) return parse_query_string(q.get<std::string>(), where);
  const std::string kind = string_at(field(q, "query", where), where + ".query");
  if (std::find(kQueryKinds.begin(), kQueryKinds.end(), kind) == kQueryKinds.end())
    throw ProblemError(where, "unknown query '" + kind + "'");
  json out = q;
  for (auto& [key, value] : out.items()) {
    // Point coordinates are kept as strings for exactness.
    if (key == "point" && value.is_array())
      for (auto& c : value)
        if (c.is_number_integer()) c = std::to_string(c.get<long long>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Query execution

json execute(const SmearedRing& R, const json& q, const std::string& where) {
  const std::string kind = q.at("query").get<std::string>();
  const RingPtr& ring = R.ring();
  const std::size_t n = R.num_ideals();
  json out;
  if (kind == "validate") {
    out["valid"] = true;
    out["violations"] = json::array();
  } else if (kind == "member") {
    const Polynomial f = poly_at(field(q, "poly", where), ring, where + ".poly");
    out = membership_payload(R, f);
  } else if (kind == "eval") {
    const Polynomial f = poly_at(field(q, "poly", where), ring, where + ".poly");
    const std::size_t i = index_at(field(q, "index", where), n, where + ".index");
    const Rational v = R.evaluate_at_smeared_point(f, i);
    out["value"] = v.to_string();
    out["membership"] = membership_payload(R, f);
  } else if (kind == "partition") {
    const std::size_t i = index_at(field(q, "index", where), n, where + ".index");
    const PartitionWitness w = R.partition_of_unity(i);
    out["a"] = str(w.a);
    out["b"] = str(w.b);
    out["a_alpha"] = rats_json(w.a_membership.constants);
    out["b_alpha"] = rats_json(w.b_membership.constants);
    auto ac = R.ideal(i).membership_cofactors(w.a);
    if (!ac) throw InternalError("a is not in I_i");
    out["a_cofactors"] = polys_json(*ac);
    json bc = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        bc.push_back(nullptr);
        continue;
      }
      auto c = R.ideal(j).membership_cofactors(w.b);
      if (!c) throw InternalError("b is not in I_j");
      bc.push_back(polys_json(*c));
    }
    out["b_cofactors"] = bc;
  } else if (kind == "chain") {
    const std::size_t i = index_at(field(q, "index", where), n, where + ".index");
    const std::size_t L = count_at(field(q, "length", where), where + ".length");
    const ChainWitness w = R.chain_witness(i, L);
    out["g"] = str(w.g);
    out["h"] = str(w.h);
    out["length"] = w.length;
    out["evidence"] = polys_json(w.evidence);
    auto gc = R.ideal(i).membership_cofactors(w.g);
    if (!gc) throw InternalError("g is not in I_i");
    out["g_cofactors"] = polys_json(*gc);
    json ec = json::array();
    Polynomial power = Polynomial::constant(ring, 1);
    for (std::size_t j = 0; j <= L; ++j) {
      if (j > 0) power = power * w.h;
      auto c = R.ideal(i).membership_cofactors(power - w.evidence[j]);
      if (!c) throw InternalError("evidence is not congruent to the power");
      ec.push_back(polys_json(*c));
    }
    out["evidence_cofactors"] = ec;
  } else if (kind == "dims") {
    out["dims"] = R.dims();
  } else if (kind == "verdict") {
    const Verdicts v = R.verdicts();
    out["noetherian"] = v.noetherian;
    out["depicted"] = v.depicted_by_S;
    out["dims"] = v.per_ideal_dims;
    out["gdim_lower_bounds"] = v.gdim_lower_bounds;
    out["radicality_asserted"] = v.radicality_asserted;
  } else if (kind == "locus") {
    const auto pt = rationals_at(field(q, "point", where), where + ".point");
    const LocusResult res = R.locus_member(pt);
    out["in_locus"] = res.in_locus;
    json ev = json::array();
    for (const auto& e : res.evidence) {
      json item{{"ideal", e.ideal + 1}};
      if (e.nonvanishing_generator) {
        item["nonvanishing_generator"] = *e.nonvanishing_generator + 1;
        item["value"] = e.value.to_string();
      } else {
        item["nonvanishing_generator"] = nullptr;
        item["all_vanish"] = true;
      }
      ev.push_back(item);
    }
    out["evidence"] = ev;
  } else if (kind == "basis") {
    const std::size_t d = count_at(field(q, "degree", where), where + ".degree");
    const auto basis = R.r_basis(d);
    out["dimension"] = basis.size();
    out["basis"] = polys_json(basis);
    json alphas = json::array();
    for (const auto& b : basis) alphas.push_back(rats_json(R.member(b).constants));
    out["alphas"] = alphas;
  } else if (kind == "constancy") {
    const Polynomial f = poly_at(field(q, "poly", where), ring, where + ".poly");
    const std::size_t i = index_at(field(q, "index", where), n, where + ".index");
    const json& pts = field(q, "points", where);
    if (!pts.is_array()) throw ProblemError(where + ".points", "expected an array of points");
    std::vector<std::vector<Rational>> points;
    for (std::size_t k = 0; k < pts.size(); ++k)
      points.push_back(rationals_at(pts[k], where + ".points[" + std::to_string(k) + "]"));
    const ConstancyReport rep = R.smeared_constancy_check(f, i, points);
    out["alpha"] = rep.alpha.to_string();
    out["values"] = rats_json(rep.values);
    out["consistent"] = rep.consistent();
    json mm = json::array();
    for (auto m : rep.mismatches) mm.push_back(m + 1);
    out["mismatches"] = mm;
  }
  return out;
}

// Checks one successful result payload. Mirrors execute().
void check_payload(Checker& c, const json& q, const json& out, const std::string& where) {
  const std::string kind = q.at("query").get<std::string>();
  const RingPtr& ring = c.ring();
  const std::size_t n = c.n();
  auto one = Polynomial::constant(ring, 1);
  if (kind == "validate") {
    c.expect(out.value("valid", false), "validate reported invalid in an accepted run");
  } else if (kind == "member") {
    c.membership(poly_at(q.at("poly"), ring, where), out);
  } else if (kind == "eval") {
    const Polynomial f = poly_at(q.at("poly"), ring, where);
    const std::size_t i = index_at(q.at("index"), n, where);
    const json& m = field(out, "membership", where);
    c.expect(m.value("member", false), "eval of a non-member");
    if (!m.value("member", false)) return;
    c.membership(f, m);
    c.expect(rational_at(out.at("value"), where) == rational_at(m.at("alpha").at(i), where),
             "value differs from alpha_i");
  } else if (kind == "partition") {
    const std::size_t i = index_at(q.at("index"), n, where);
    const Polynomial a = poly_at(field(out, "a", where), ring, where);
    const Polynomial b = poly_at(field(out, "b", where), ring, where);
    c.expect(a + b == one, "a + b != 1");
    c.combination(a, c.ideal(i).generators(), field(out, "a_cofactors", where), "a in I_i");
    const json& bc = field(out, "b_cofactors", where);
    c.expect(bc.is_array() && bc.size() == n, "b_cofactors has the wrong length");
    if (!bc.is_array() || bc.size() != n) return;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) c.combination(b, c.ideal(j).generators(), bc[j], "b in I_" + std::to_string(j + 1));
    // Forced alpha pattern: a vanishes at smeared point i and is 1 at the others.
    const auto aa = rationals_at(field(out, "a_alpha", where), where);
    const auto ba = rationals_at(field(out, "b_alpha", where), where);
    c.expect(aa.size() == n && ba.size() == n, "alpha vectors have the wrong length");
    if (aa.size() != n || ba.size() != n) return;
    for (std::size_t j = 0; j < n; ++j) {
      c.expect(aa[j] == Rational(j == i ? 0 : 1), "alpha(a) pattern");
      c.expect(ba[j] == Rational(j == i ? 1 : 0), "alpha(b) pattern");
    }
  } else if (kind == "chain") {
    const std::size_t i = index_at(q.at("index"), n, where);
    const std::size_t L = count_at(q.at("length"), where);
    const Polynomial g = poly_at(field(out, "g", where), ring, where);
    const Polynomial h = poly_at(field(out, "h", where), ring, where);
    c.expect(!g.is_zero(), "g is zero");
    c.combination(g, c.ideal(i).generators(), field(out, "g_cofactors", where), "g in I_i");
    const auto ev = polys_at(field(out, "evidence", where), ring, where);
    const json& ec = field(out, "evidence_cofactors", where);
    c.expect(ev.size() == L + 1 && ec.is_array() && ec.size() == L + 1, "evidence has the wrong length");
    if (ev.size() != L + 1 || ec.size() != L + 1) return;
    Polynomial power = one;
    PolynomialSpan span;
    for (std::size_t j = 0; j <= L; ++j) {
      if (j > 0) power = power * h;
      c.combination(power - ev[j], c.ideal(i).generators(), ec[j], "h^" + std::to_string(j) + " - evidence");
      c.expect(c.ideal(i).normal_form(ev[j]) == ev[j], "evidence " + std::to_string(j) + " is not a normal form");
      c.expect(span.add(ev[j]), "step " + std::to_string(j) + " is not strict");
    }
  } else if (kind == "dims" || kind == "verdict") {
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < n; ++i) dims.push_back(krull_dim(c.ideal(i)));
    c.expect(out.at("dims").get<std::vector<std::size_t>>() == dims, "dimensions differ on recomputation");
    if (kind == "verdict") {
      bool all0 = std::all_of(dims.begin(), dims.end(), [](auto d) { return d == 0; });
      bool all1 = std::all_of(dims.begin(), dims.end(), [](auto d) { return d >= 1; });
      c.expect(out.at("noetherian").get<bool>() == all0, "noetherian verdict");
      c.expect(out.at("depicted").get<bool>() == all1, "depiction verdict");
      c.expect(out.at("gdim_lower_bounds").get<std::vector<std::size_t>>() == dims, "gdim lower bounds");
    }
  } else if (kind == "locus") {
    const auto pt = rationals_at(q.at("point"), where);
    const json& ev = field(out, "evidence", where);
    c.expect(ev.is_array() && ev.size() == n, "evidence has the wrong length");
    if (!ev.is_array() || ev.size() != n) return;
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& gens = c.ideal(i).generators();
      if (ev[i].at("nonvanishing_generator").is_null()) {
        all = false;
        for (const auto& g : gens) c.expect(g.evaluate(pt).is_zero(), "a generator claimed to vanish does not");
      } else {
        const std::size_t k = index_at(ev[i].at("nonvanishing_generator"), gens.size(), where);
        const Rational v = gens[k].evaluate(pt);
        c.expect(!v.is_zero() && v == rational_at(ev[i].at("value"), where), "nonvanishing generator value");
      }
    }
    c.expect(out.at("in_locus").get<bool>() == all, "in_locus flag");
  } else if (kind == "basis") {
    const std::size_t d = count_at(q.at("degree"), where);
    const auto basis = polys_at(field(out, "basis", where), ring, where);
    c.expect(out.at("dimension").get<std::size_t>() == basis.size(), "dimension field");
    PolynomialSpan span;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      c.expect(basis[k].total_degree() <= d, "basis element exceeds the degree bound");
      c.expect(span.add(basis[k]), "basis elements are linearly dependent");
      for (std::size_t i = 0; i < n; ++i) {
        const Polynomial r = c.ideal(i).normal_form(basis[k]);
        c.expect(r.is_constant(), "basis element is not in R");
        c.expect(r.constant_term() == rational_at(out.at("alphas").at(k).at(i), where), "basis alpha");
      }
    }
  } else if (kind == "constancy") {
    const Polynomial f = poly_at(q.at("poly"), ring, where);
    const std::size_t i = index_at(q.at("index"), n, where);
    const Rational alpha = rational_at(out.at("alpha"), where);
    const auto values = rationals_at(out.at("values"), where);
    const json& pts = q.at("points");
    c.expect(values.size() == pts.size(), "value count");
    if (values.size() != pts.size()) return;
    bool consistent = true;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto p = rationals_at(pts[k], where);
      c.expect(f.evaluate(p) == values[k], "point value");
      consistent = consistent && values[k] == alpha;
    }
    c.expect(c.ideal(i).normal_form(f - Polynomial::constant(ring, alpha)).is_zero(), "alpha is the value at the smeared point");
    c.expect(out.at("consistent").get<bool>() == consistent, "consistent flag");
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ProblemError(path, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) throw ProblemError("$", "problem must be a JSON object");
  const json& fmt = field(doc, "format", "$");
  if (!fmt.is_number_integer() || fmt.get<int>() != 1) throw ProblemError("$.format", "unsupported format (expected 1)");

  const json& rj = field(doc, "ring", "$");
  const json& vars = field(rj, "variables", "$.ring");
  if (!vars.is_array()) throw ProblemError("$.ring.variables", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vars.size(); ++k) names.push_back(string_at(vars[k], "$.ring.variables"));
  MonomialOrder order = MonomialOrder::grevlex();
  if (rj.contains("order")) {
    const std::string o = string_at(rj.at("order"), "$.ring.order");
    if (o == "lex") {
      order = MonomialOrder::lex();
    } else if (o != "grevlex") {
      throw ProblemError("$.ring.order", "expected \"grevlex\" or \"lex\"");
    }
  }
  Problem p;
  try {
    p.ring = PolyRing::make(names, order);
  } catch (const PreconditionError& e) {
    throw ProblemError("$.ring.variables", e.what());
  }
  p.config.ring = p.ring;

  const json& ideals = field(doc, "ideals", "$");
  if (!ideals.is_array()) throw ProblemError("$.ideals", "expected an array");
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const std::string where = "$.ideals[" + std::to_string(i) + "]";
    const json& item = ideals[i];
    bool radical = false;
    const json* gens = &item;
    if (item.is_object()) {
      gens = &field(item, "generators", where);
      if (item.contains("radical")) {
        if (!item.at("radical").is_boolean()) throw ProblemError(where + ".radical", "expected a boolean");
        radical = item.at("radical").get<bool>();
      }
    }
    p.config.ideals.emplace_back(p.ring, polys_at(*gens, p.ring, where + ".generators"));
    p.config.radical_asserted.push_back(radical);
  }
  if (doc.contains("check_radical")) {
    if (!doc.at("check_radical").is_boolean()) throw ProblemError("$.check_radical", "expected a boolean");
    p.check_radical = doc.at("check_radical").get<bool>();
  }
  if (doc.contains("queries")) {
    const json& qs = doc.at("queries");
    if (!qs.is_array()) throw ProblemError("$.queries", "expected an array");
    for (const auto& q : qs) p.queries.push_back(q);
  }
  return p;
}

Problem load_problem(const std::string& path) { return parse_problem(load_json(path)); }

RunOutcome run_problem(const Problem& problem, const RunOptions& options) {
  RunOutcome outcome;
  json& doc = outcome.document;
  doc["format"] = 1;
  doc["engine"] = kEngineVersion;
  doc["ring"] = {{"variables", problem.ring->variable_names()}, {"order", order_name(problem.ring->order())}};

  const auto start = std::chrono::steady_clock::now();
  const ValidationReport report = validate(problem.config, problem.check_radical);
  json validation{{"valid", report.ok()}, {"violations", violations_json(report)}};
  if (!report.ok()) {
    validation["elapsed_ms"] = elapsed_ms(start);
    doc["validation"] = validation;
    doc["results"] = json::array();
    outcome.exit_code = kExitInvalid;
    return outcome;
  }
  const SmearedRing R(problem.config);
  json certs = json::array();
  for (std::size_t i = 0; i < R.num_ideals(); ++i) {
    for (std::size_t j = i + 1; j < R.num_ideals(); ++j) {
      auto c = unit_certificate(concat(R.ideal(i).generators(), R.ideal(j).generators()), R.ring());
      if (!c) throw InternalError("coprime pair without a unit certificate");
      certs.push_back({{"pair", {i + 1, j + 1}}, {"cofactors", polys_json(*c)}});
    }
  }
  validation["coprimality_certificates"] = certs;
  validation["elapsed_ms"] = elapsed_ms(start);
  doc["validation"] = validation;

  doc["results"] = json::array();
  for (std::size_t k = 0; k < problem.queries.size(); ++k) {
    const std::string where = "$.queries[" + std::to_string(k) + "]";
    const auto qstart = std::chrono::steady_clock::now();
    json result;
    bool failed = false;
    try {
      const json q = normalize_query(problem.queries[k], where);
      result["query"] = q.at("query");
      result["input"] = q;
      json payload = execute(R, q, where);
      VerifyOutcome self;
      Checker checker(problem, self);
      checker.at(where);
      check_payload(checker, q, payload, where);
      if (!self.ok()) throw InternalError("self-check failed: " + self.failures.front());
      result["status"] = "ok";
      result["result"] = payload;
    } catch (const std::exception& e) {
      if (!result.contains("input")) result["input"] = problem.queries[k];
      result["status"] = "error";
      result["error"] = {{"type", error_type(e)}, {"message", e.what()}};
      failed = true;
    }
    result["elapsed_ms"] = elapsed_ms(qstart);
    doc["results"].push_back(result);
    if (failed) {
      outcome.exit_code = kExitQueryError;
      if (options.strict) break;
    }
  }
  return outcome;
}

VerifyOutcome verify_document(const json& result, const Problem& problem) {
  VerifyOutcome out;
  Checker c(problem, out);
  c.at("$");
  try {
    c.expect(result.value("format", 0) == 1, "unsupported result format");
    c.expect(result.at("ring").at("variables").get<std::vector<std::string>>() == problem.ring->variable_names(),
             "ring variables differ from the problem");

    c.at("$.validation");
    const json& val = field(result, "validation", "$");
    const ValidationReport report = validate(problem.config, problem.check_radical);
    c.expect(val.at("valid").get<bool>() == report.ok(), "validity differs on recomputation");
    if (!report.ok()) {
      c.expect(result.at("results").empty(), "results present for an invalid configuration");
      return out;
    }
    const std::size_t n = problem.config.ideals.size();
    const json& certs = field(val, "coprimality_certificates", "$.validation");
    c.expect(certs.size() == n * (n - 1) / 2, "missing coprimality certificates");
    for (const auto& cert : certs) {
      const std::size_t i = index_at(cert.at("pair").at(0), n, "$.validation");
      const std::size_t j = index_at(cert.at("pair").at(1), n, "$.validation");
      c.combination(Polynomial::constant(problem.ring, 1),
                    concat(problem.config.ideals[i].generators(), problem.config.ideals[j].generators()),
                    cert.at("cofactors"), "1 in I_i + I_j");
    }

    const json& results = field(result, "results", "$");
    c.at("$.results");
    c.expect(results.size() <= problem.queries.size(), "more results than queries");
    for (std::size_t k = 0; k < results.size() && k < problem.queries.size(); ++k) {
      const std::string where = "$.results[" + std::to_string(k) + "]";
      c.at(where);
      const json& r = results[k];
      json q;
      bool well_formed = true;
      try {
        q = normalize_query(problem.queries[k], where);
      } catch (const ProblemError&) {
        well_formed = false;
      }
      const std::string status = r.value("status", "");
      if (!well_formed) {
        c.expect(status == "error", "malformed query reported as ok");
        continue;
      }
      c.expect(r.at("input") == q, "result does not match the problem's query");
      if (status == "ok") {
        check_payload(c, q, field(r, "result", where), where);
      } else {
        c.expect(status == "error", "unknown status");
        // An error must reproduce.
        bool reproduced = false;
        try {
          execute(SmearedRing(problem.config), q, where);
        } catch (const std::exception& e) {
          reproduced = error_type(e) == r.at("error").at("type").get<std::string>();
        }
        c.expect(reproduced, "reported error does not reproduce");
      }
    }
    if (results.size() < problem.queries.size())
      c.expect(!results.empty() && results.back().value("status", "") == "error",
               "results truncated without a terminating error");
  } catch (const std::exception& e) {
    c.expect(false, std::string("malformed result document: ") + e.what());
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json strip_timing(json doc) {
  if (doc.is_object()) {
    doc.erase("elapsed_ms");
    for (auto& [k, v] : doc.items()) v = strip_timing(v);
  } else if (doc.is_array()) {
    for (auto& v : doc) v = strip_timing(v);
  }
  return doc;
}

}  // namespace smeared::cli
