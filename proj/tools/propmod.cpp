// Command-line driver: numerical and affine proportional-modularity checks,
// inequality conversions, verification and the genus census.
//
// Exit codes: 0 yes/ok, 1 no, 2 input error, 3 resource cap hit,
// 4 unsupported input, 5 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propmod/io.hpp"
#include "propmod/propmod.hpp"

namespace {

using namespace propmod;
using io::json;

enum Exit { kYes = 0, kNo = 1, kInput = 2, kResource = 3, kUnsupported = 4, kInternal = 5 };

struct Config {
  std::string format = "text";
  std::size_t max_branches = default_max_branches();
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

std::vector<std::int64_t> int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : split(text, ',')) {
    Rational r = parse_rational(s);
    if (!is_integer(r)) throw InputError("expected an integer, got " + s);
    out.push_back(to_i64(num(r)));
  }
  return out;
}

std::vector<Integer> big_list(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& s : split(text, ',')) {
    Rational r = parse_rational(s);
    if (!is_integer(r)) throw InputError("expected an integer, got " + s);
    out.push_back(num(r));
  }
  return out;
}

// "lo,hi" with hi possibly "inf"; closed unless hi is infinite.
RationalInterval interval_arg(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("interval must be 'lo,hi', got " + text);
  Rational lo = parse_rational(parts[0]);
  RationalInterval iv = (parts[1] == "inf" || parts[1] == "+inf") ? RationalInterval::halfline(lo)
                                                                  : RationalInterval::closed(lo, parse_rational(parts[1]));
  iv.validate();
  return iv;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_check_numerical(const Config& cfg, const std::string& gens_text) {
  auto gens = int_list(gens_text);
  NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  if (s.is_whole()) {
    if (cfg.format == "json") print_json({{"semigroup", s.str()}, {"propmod", true}, {"intervals", json::array()}});
    else std::cout << s.str() << " is N: proportionally modular (every interval works)\n";
    return kYes;
  }
  auto pairs = minimal_intervals(s);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& pr : pairs)
      arr.push_back({{"minimal", pr.minimal.str()}, {"maximal", pr.maximal.str()}, {"halfline", pr.halfline()}});
    print_json({{"semigroup", s.str()}, {"propmod", !pairs.empty()}, {"intervals", arr}});
  } else if (pairs.empty()) {
    std::cout << s.str() << ": not proportionally modular\n";
  } else {
    std::cout << s.str() << ": proportionally modular\n";
    for (const auto& pr : pairs)
      std::cout << "  minimal " << pr.minimal.str() << "  maximal " << pr.maximal.str()
                << (pr.halfline() ? "  (half-line)" : "") << '\n';
  }
  return pairs.empty() ? kNo : kYes;
}

int cmd_intervals(const Config& cfg, const std::string& from_ineq, const std::string& to_ineq,
                  const std::string& semigroup) {
  json out;
  if (!from_ineq.empty()) {
    auto abc = big_list(from_ineq);
    if (abc.size() != 3) throw InputError("--from-inequality needs a,b,c");
    RationalInterval iv = inequality_to_interval(abc[0], abc[1], abc[2]);
    out["interval"] = iv.str();
    out["semigroup"] = from_interval(iv).str();
  }
  if (!to_ineq.empty()) {
    IntervalInequality ie = interval_to_inequality(interval_arg(to_ineq));
    out["inequality"] = {{"a", io::integer_to_json(ie.a)}, {"b", io::integer_to_json(ie.b)}, {"c", io::integer_to_json(ie.c)}};
  }
  if (!semigroup.empty()) {
    RationalInterval iv = interval_arg(semigroup);
    NumericalSemigroup s = from_interval(iv);
    out["semigroup"] = s.str();
    out["gaps"] = s.gaps();
    out["phi"] = phi(iv);
    out["halfline"] = is_halfline_interval(iv);
  }
  if (out.is_null()) throw InputError("intervals needs --from-inequality, --to-inequality or --semigroup");
  if (cfg.format == "json") {
    print_json(out);
  } else {
    for (auto it = out.begin(); it != out.end(); ++it)
      std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
  return kYes;
}

void dump_points(const std::string& path, const AffineSemigroup& s, const std::optional<ModularInequality>& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  std::vector<std::int64_t> box = s.gap_extent();
  for (auto& b : box) b += 2;
  for (std::size_t k = 0; k < s.dimension(); ++k) out << 'x' << k + 1 << ',';
  out << "kind,band\n";
  detail::for_each_in_box(box, [&](const LatticePoint& x) {
    for (auto c : x) out << c << ',';
    if (s.is_gap(x)) {
      out << "gap,\n";
      return;
    }
    out << "member,";
    if (m)
      if (auto band = band_membership(*m, x)) out << *band;
    out << '\n';
  });
}

int cmd_check_affine(const Config& cfg, const std::string& path, const std::string& witness_out,
                     const std::string& dump) {
  AffineSemigroup s = io::semigroup_from_json(io::read_json_file(path));
  CheckOptions opt;
  opt.max_branches = cfg.max_branches;
  CheckResult r = check(s, opt);
  if (!dump.empty()) dump_points(dump, s, r.inequality);

  const char* verdict = r.verdict == Verdict::Yes ? "YES" : r.verdict == Verdict::No ? "NO" : "UNSUPPORTED";
  json doc = {{"verdict", verdict}, {"case", r.case_id}};
  if (r.witness) doc["witness"] = io::witness_to_json(*r.witness);
  if (r.inequality) doc["inequality"] = io::inequality_to_json(*r.inequality);
  if (!r.reason.empty()) doc["reason"] = r.reason;
  if (!witness_out.empty() && r.witness) {
    std::ofstream out(witness_out);
    if (!out) throw InputError("cannot write " + witness_out);
    out << io::witness_to_json(*r.witness).dump(2) << '\n';
  }
  if (cfg.format == "json") {
    print_json(doc);
  } else {
    std::cout << verdict;
    if (r.verdict == Verdict::Yes) std::cout << " (case " << r.case_id << ")";
    std::cout << '\n';
    if (!r.reason.empty()) std::cout << "reason: " << r.reason << '\n';
    if (r.witness) std::cout << "witness: " << io::witness_to_json(*r.witness).dump() << '\n';
    if (r.inequality) std::cout << "inequality: " << io::inequality_to_json(*r.inequality).dump() << '\n';
  }
  if (r.verdict == Verdict::Unsupported) return kUnsupported;
  return r.verdict == Verdict::Yes ? kYes : kNo;
}

int cmd_from_inequality(const Config& cfg, const std::string& f, const std::string& b, const std::string& g,
                        const std::string& dump) {
  auto bb = big_list(b);
  if (bb.size() != 1) throw InputError("--b takes a single integer");
  ModularInequality m = ModularInequality::make(big_list(f), bb[0], big_list(g), true);
  AffineSemigroup gaps = gaps_from_inequality(m);
  AffineSemigroup s(gaps.dimension(), gaps.gaps(), gaps.minimal_generators());
  if (!dump.empty()) dump_points(dump, s, m);
  json doc = io::semigroup_to_json(s);
  if (cfg.format == "json") {
    print_json(doc);
  } else {
    std::cout << doc.dump() << '\n';
  }
  return kYes;
}

// Accepts a bare witness document or a check-affine report containing one.
json witness_doc(const json& j) { return j.contains("witness") ? j.at("witness") : j; }

int cmd_to_inequality(const Config& cfg, const std::string& path) {
  Witness w = io::witness_from_json(witness_doc(io::read_json_file(path)));
  json doc = io::inequality_to_json(witness_to_inequality(w));
  if (cfg.format == "json") print_json(doc);
  else std::cout << doc.dump() << '\n';
  return kYes;
}

int cmd_verify(const Config& cfg, const std::string& sg_path, const std::string& cert_path) {
  AffineSemigroup s = io::semigroup_from_json(io::read_json_file(sg_path));
  json cert = io::read_json_file(cert_path);
  bool ok;
  if (cert.contains("witness") || io::is_witness_document(cert)) {
    Witness w = io::witness_from_json(witness_doc(cert));
    if (w.dimension() != s.dimension()) throw InputError("witness dimension does not match semigroup");
    ok = verify_witness(s, w);
  } else {
    ModularInequality m = io::inequality_from_json(cert.contains("inequality") ? cert.at("inequality") : cert);
    if (m.dimension() != s.dimension()) throw InputError("inequality dimension does not match semigroup");
    ok = verify_inequality(s, m);
  }
  if (cfg.format == "json") print_json({{"verified", ok}});
  else std::cout << (ok ? "YES" : "NO") << '\n';
  return ok ? kYes : kNo;
}

int cmd_census(const Config& cfg, std::int64_t max_genus, std::int64_t genus_cap) {
  auto rows = census(max_genus, genus_cap);
  if (cfg.format == "json") print_json(io::census_json(rows));
  else std::cout << io::census_csv(rows);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propmod: proportionally modular numerical and affine semigroups"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-branches", cfg.max_branches, "Cap on feasibility solves (env PROPMOD_MAX_BRANCHES)")
      ->check(CLI::PositiveNumber);

  std::string gens;
  auto* num = app.add_subcommand("check-numerical", "Minimal and maximal defining intervals of <generators>");
  num->add_option("--generators", gens, "Comma-separated generators")->required();

  std::string from_ineq, to_ineq, sg_iv;
  auto* ivs = app.add_subcommand("intervals", "Interval <-> inequality conversions");
  ivs->add_option("--from-inequality", from_ineq, "a,b,c for a x mod b <= c x");
  ivs->add_option("--to-inequality", to_ineq, "lo,hi of a closed interval");
  ivs->add_option("--semigroup", sg_iv, "lo,hi (hi may be inf): semigroup of the interval");

  std::string sg_path, witness_out, dump;
  auto* aff = app.add_subcommand("check-affine", "Decide proportional modularity of an N^n-semigroup");
  aff->add_option("semigroup", sg_path, "Semigroup JSON document")->required();
  aff->add_option("--witness-out", witness_out, "Write the witness document here");
  aff->add_option("--dump-points", dump, "Write labelled lattice points (CSV) here");

  std::string f, b, g, dump2;
  auto* fi = app.add_subcommand("from-inequality", "Gap set of f.x mod b <= g.x");
  fi->add_option("--f", f, "Comma-separated f")->required();
  fi->add_option("--b", b, "Modulus")->required();
  fi->add_option("--g", g, "Comma-separated g")->required();
  fi->add_option("--dump-points", dump2, "Write labelled lattice points (CSV) here");

  std::string wit_path;
  auto* ti = app.add_subcommand("to-inequality", "Modular inequality of a witness");
  ti->add_option("witness", wit_path, "Witness JSON document")->required();

  std::string v_sg, v_cert;
  auto* ver = app.add_subcommand("verify", "Check a witness or inequality against a semigroup");
  ver->add_option("semigroup", v_sg, "Semigroup JSON document")->required();
  ver->add_option("certificate", v_cert, "Witness or inequality JSON document")->required();

  std::int64_t max_genus = 15, genus_cap = 25;
  auto* cen = app.add_subcommand("census", "Count (proportionally modular) numerical semigroups by genus");
  cen->add_option("--max-genus", max_genus, "Largest genus")->required();
  cen->add_option("--genus-cap", genus_cap, "Refuse larger genus than this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kInput;
  }

  try {
    if (*num) return cmd_check_numerical(cfg, gens);
    if (*ivs) return cmd_intervals(cfg, from_ineq, to_ineq, sg_iv);
    if (*aff) return cmd_check_affine(cfg, sg_path, witness_out, dump);
    if (*fi) return cmd_from_inequality(cfg, f, b, g, dump2);
    if (*ti) return cmd_to_inequality(cfg, wit_path);
    if (*ver) return cmd_verify(cfg, v_sg, v_cert);
    if (*cen) return cmd_census(cfg, max_genus, genus_cap);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (count " << e.count << ")\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInput;
}
