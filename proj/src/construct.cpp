#include "bolkit/construct.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "bolkit/extensions.hpp"
#include "bolkit/gf2.hpp"

namespace bolkit {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::BadSpec, msg); }

std::size_t number(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    bad("expected a number for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> tokens(std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

LoopTable named(const std::vector<std::string>& t) {
  if (t.size() != 2) bad("usage: named <order12|order16cyclic|order16elem|order4n:N|commutant:K[:M]>");
  auto parts = split(t[1], ':');
  auto head = parts[0];
  if (parts.size() == 1) {
    if (head == "order12") return build_named_example(NamedExample::order12);
    if (head == "order16cyclic") return build_named_example(NamedExample::order16cyclic);
    if (head == "order16elem") return build_named_example(NamedExample::order16elem);
  }
  if (head == "order4n" && parts.size() == 2)
    return build_named_example(NamedExample::order4n, {.n = number(parts[1], "order4n")});
  if (head == "commutant" && (parts.size() == 2 || parts.size() == 3)) {
    NamedParams p{.k = number(parts[1], "commutant")};
    if (parts.size() == 3) p.m = number(parts[2], "commutant exponent");
    return build_named_example(NamedExample::commutant_order, p);
  }
  bad("unknown named example '" + t[1] + "'");
}

LoopTable semidirect(const std::vector<std::string>& t) {
  std::map<std::string, std::string> fields;
  for (std::size_t i = 1; i < t.size(); ++i) {
    auto eq = t[i].find('=');
    if (eq == std::string::npos) bad("semidirect field '" + t[i] + "' lacks '='");
    auto key = t[i].substr(0, eq);
    if (key != "K" && key != "E" && key != "tau") bad("unknown semidirect field '" + key + "'");
    if (!fields.emplace(key, t[i].substr(eq + 1)).second) bad("repeated semidirect field '" + key + "'");
  }
  if (fields.size() != 3) bad("semidirect needs K=, E= and tau=");
  auto kt = group_from_spec(fields["K"]);
  if (!is_associative(kt)) bad("K must be a group");
  GroupTable k(kt);
  auto e = group_from_spec(fields["E"]);
  auto aut = automorphism_group(k);
  auto idx = split(fields["tau"], ',');
  if (idx.size() != e.order())
    bad("tau needs " + std::to_string(e.order()) + " entries, got " + std::to_string(idx.size()));
  std::vector<Automorphism> assign;
  for (auto s : idx) {
    auto i = number(s, "tau");
    if (i < 1 || i > aut.size()) bad("tau index " + std::string(s) + " outside 1.." + std::to_string(aut.size()));
    assign.push_back(aut[i - 1]);
  }
  if (!assign[0].is_identity()) bad("tau of the identity must be index 1");
  TauMap tau(e, k, std::move(assign));
  return build_semidirect(k, e, tau).with_name("semidirect K=" + fields["K"] + " E=" + fields["E"] +
                                               " tau=" + fields["tau"]);
}

}  // namespace

LoopTable group_from_spec(std::string_view spec) {
  auto parts = split(spec, ':');
  if (parts.size() != 2) bad("group spec must be cyclic:N, elem2:M or dihedral:K, got '" + std::string(spec) + "'");
  auto n = number(parts[1], parts[0]);
  try {
    if (parts[0] == "cyclic" && n >= 1) return cyclic_group(n);
    if (parts[0] == "elem2") return elementary_abelian_2group(n);
    if (parts[0] == "dihedral" && n >= 1) return dihedral_group(n);
  } catch (const Error& e) {
    bad("group spec '" + std::string(spec) + "': " + e.what());
  }
  bad("unknown group spec '" + std::string(spec) + "'");
}

LoopTable construct_from_spec(std::string_view spec) {
  auto t = tokens(spec);
  if (t.empty()) bad("empty spec");
  const auto& kind = t[0];
  if (kind == "q9") {
    if (t.size() != 2) bad("usage: q9 <9 bits>");
    return gf2::build_q9(gf2::parse_q9(t[1]));
  }
  if (kind == "exceptional") {
    if (t.size() != 1) bad("usage: exceptional");
    return gf2::build_exceptional();
  }
  if (kind == "named") return named(t);
  if (kind == "semidirect") return semidirect(t);
  bad("unknown spec kind '" + kind + "'");
}

}  // namespace bolkit
