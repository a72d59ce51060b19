// teichcurve: exact invariants of twisted Teichmueller curves on Hilbert
// modular surfaces. All default output is exact (integers, p/q rationals,
// <rational>*pi volumes); no floating point.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "teich/cache.hpp"
#include "teich/coset.hpp"
#include "teich/fuchsian.hpp"
#include "teich/lyapunov.hpp"
#include "teich/textio.hpp"
#include "teich/twist.hpp"

using namespace teich;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBound = 4;

struct Options {
  std::string format = "text";
  std::string cache_dir;
  int max_word_length = 14;
  bool timestamps = false;
};

std::string cache_dir_from_env(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("TEICHCURVE_CACHE");
  return env ? env : "";
}

Spin parse_spin(const std::string& s) {
  if (s == "odd") return Spin::odd;
  if (s == "even") return Spin::even;
  throw CLI::ValidationError("--spin must be odd or even");
}

void stamp(const Options& opt) {
  if (opt.timestamps) std::cout << "# run at " << time(nullptr) << "\n";
}

GroupSpec load_group(const std::string& spec, std::optional<long long> disc_flag) {
  if (spec.rfind("builtin:", 0) == 0) {
    std::string name = spec.substr(8);
    if (disc_flag) return builtin_group(name, order_context(*disc_flag));
    return builtin_group(name);
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open group file " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string word_to_text(const std::vector<std::pair<std::string, long>>& word) {
  if (word.empty()) return "(empty)";
  std::string out;
  for (const auto& [l, e] : word) {
    if (!out.empty()) out += "*";
    out += l;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string letters_to_text(const VeechPresentation& pres,
                            const std::vector<WordLetter>& word) {
  if (word.empty()) return "(empty)";
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += "*";
    out += pres.generators[l.gen].label;
    if (l.inverse) out += "^-1";
  }
  return out;
}

json invariants_json(const CurveInvariants& inv, const CosetAction& act) {
  json j;
  j["index"] = act.orbit_size.get_str();
  j["maximal_index"] = act.maximal_index.get_str();
  j["verdict"] = verdict_name(act.verdict);
  j["chi"] = rat_str(inv.chi);
  j["volume"] = rat_str(inv.volume_over_pi) + "*pi";
  j["e2"] = inv.e2;
  if (inv.e5) j["e5"] = inv.e5;
  j["genus"] = inv.genus;
  j["cusps_total"] = inv.total_cusps;
  json cusps = json::array();
  for (const auto& c : inv.cusps) {
    json cj;
    cj["parent"] = c.parent_cusp;
    cj["count"] = c.count;
    cj["widths"] = c.widths;
    cusps.push_back(cj);
  }
  j["cusps"] = cusps;
  j["exact"] = inv.exact;
  return j;
}

int cmd_euler(long long D, std::optional<std::string> spin_s, const Options& opt) {
  auto disc = order_context(D);
  std::optional<Spin> spin;
  if (spin_s) spin = parse_spin(*spin_s);
  if (!spin && disc.D % 8 != 1) spin = Spin::odd;
  stamp(opt);
  Rat chiX = chi_hilbert(disc);
  Rat chiC = chi_teich(disc, spin);
  std::optional<EllipticCount> e2;
  if (disc.D > 8) e2 = e2_weierstrass(disc);
  if (opt.format == "json") {
    json j;
    j["disc"] = D;
    j["chi_XD"] = rat_str(chiX);
    j["chi_curve"] = rat_str(chiC);
    if (e2) {
      j["e2"] = rat_str(e2->value);
      j["e2_integral"] = e2->integral;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chi(X_" << D << ") = " << rat_str(chiX) << "\n";
    std::cout << "chi(C) = " << rat_str(chiC) << "\n";
    if (e2) {
      std::cout << "e2 = " << rat_str(e2->value);
      if (!e2->integral)
        std::cout << "  (caveat: non-integral; the class-number table is "
                     "reproduced as printed, the direct coset count is authoritative)";
      std::cout << "\n";
    } else {
      std::cout << "e2 = n/a (table defined for D > 8)\n";
    }
  }
  return kExitOk;
}

int cmd_veech(long long D, const std::string& spin_s, bool as_json, const Options& opt) {
  auto disc = order_context(D);
  VeechPresentation pres = presentation(disc, parse_spin(spin_s));
  stamp(opt);
  if (as_json || opt.format == "json") {
    json j;
    j["disc"] = D;
    j["spin"] = spin_s;
    j["complete"] = pres.complete;
    j["eta_plus"] = to_string(pres.eta_plus);
    j["eta_minus"] = to_string(pres.eta_minus);
    j["eta_star"] = to_string(pres.eta_star);
    if (pres.chi) j["chi"] = rat_str(*pres.chi);
    json gens = json::array();
    for (const auto& g : pres.generators) {
      json gj;
      gj["label"] = g.label;
      gj["matrix"] = to_string(g.m);
      gens.push_back(gj);
    }
    j["generators"] = gens;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "SL(L_" << D << (parse_spin(spin_s) == Spin::odd ? "^1" : "^0") << ")"
              << (pres.complete ? " (complete generating set)" : " (partial generating set)")
              << "\n";
    for (const auto& g : pres.generators)
      std::cout << "  " << g.label << " = " << to_string(g.m) << "\n";
    std::cout << "  eta+ = " << to_string(pres.eta_plus) << ", eta- = "
              << to_string(pres.eta_minus) << ", eta* = " << to_string(pres.eta_star) << "\n";
    if (pres.chi) std::cout << "  chi = " << rat_str(*pres.chi) << "\n";
  }
  return kExitOk;
}

int cmd_table(long long D, const std::string& spin_s, int range, const Options& opt) {
  auto disc = order_context(D);
  Spin spin = parse_spin(spin_s);
  ResultCache cache(cache_dir_from_env(opt.cache_dir));

  VeechPresentation pres = presentation(disc, spin);
  IndexTable table;
  if (cache.enabled()) {
    // Fill cell-by-cell through the cache, preserving the grid order.
    table.elements.clear();
    for (int a = 1; a <= range; ++a) table.elements.push_back(QuadInt::integer(a, disc));
    for (int b = 1; b < range; ++b)
      for (int a = 0; a < range; ++a) table.elements.emplace_back(Int(a), Int(b), disc);
    int n = static_cast<int>(table.elements.size());
    table.cells.assign(n, std::vector<std::string>(n));
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        const QuadInt& nn = table.elements[row];
        const QuadInt& mm = table.elements[col];
        if (!ideals_coprime(mm, nn)) {
          table.cells[row][col] = "-";
          continue;
        }
        std::string key = std::to_string(D) + "|" + spin_s + "|" + to_string(mm) + "|" +
                          to_string(nn);
        if (auto hit = cache.lookup(key)) {
          table.cells[row][col] = json::parse(*hit).at("index").get<std::string>();
          continue;
        }
        CosetAction act = build_action(pres, mm, nn);
        table.cells[row][col] = act.orbit_size.get_str();
        json payload;
        payload["index"] = act.orbit_size.get_str();
        payload["maximal"] = act.maximal_index.get_str();
        payload["verdict"] = verdict_name(act.verdict);
        cache.store(key, payload.dump());
      }
    }
  } else {
    table = emit_table(disc, spin, range);
  }

  stamp(opt);
  if (opt.format == "json") {
    json j;
    json names = json::array();
    for (const auto& e : table.elements) names.push_back(to_string(e));
    j["elements"] = names;
    j["cells"] = table.cells;
    std::cout << j.dump(2) << "\n";
  } else {
    // CSV (default for table as well): header row of m labels, rows labeled by n.
    std::cout << "n\\m";
    for (const auto& e : table.elements) std::cout << "," << to_string(e);
    std::cout << "\n";
    for (size_t row = 0; row < table.cells.size(); ++row) {
      std::cout << to_string(table.elements[row]);
      for (const auto& cell : table.cells[row]) std::cout << "," << cell;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_index(long long D, const std::string& kind, const std::string& n_s,
              const std::string& m_s, const Options& opt) {
  auto disc = order_context(D);
  QuadInt n = parse_quadint(n_s, disc);
  stamp(opt);
  Int idx;
  if (kind == "principal") idx = index_formula(disc, IndexKind::principal, n);
  else if (kind == "hecke0") idx = index_formula(disc, IndexKind::hecke0, n);
  else if (kind == "pair") {
    if (m_s.empty()) throw CLI::ValidationError("--m required for kind=pair");
    idx = index_formula_pair(disc, parse_quadint(m_s, disc), n);
  } else {
    throw CLI::ValidationError("kind must be principal, hecke0 or pair");
  }
  if (opt.format == "json") {
    json j;
    j["kind"] = kind;
    j["index"] = idx.get_str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << idx << "\n";
  }
  return kExitOk;
}

int cmd_invariants(long long D, const std::string& spin_s, const std::string& m_s,
                   const std::string& n_s, const Options& opt) {
  auto disc = order_context(D);
  Spin spin = parse_spin(spin_s);
  QuadInt m = parse_quadint(m_s, disc), n = parse_quadint(n_s, disc);
  ResultCache cache(cache_dir_from_env(opt.cache_dir));
  std::string key = std::to_string(D) + "|" + spin_s + "|" + to_string(m) + "|" +
                    to_string(n) + "|invariants";

  json j;
  if (auto hit = cache.lookup(key)) {
    j = json::parse(*hit);
  } else {
    CosetAction act = build_action(disc, spin, m, n);
    CurveInvariants inv = subgroup_invariants(act);
    j = invariants_json(inv, act);
    cache.store(key, j.dump());
  }

  stamp(opt);
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "index = " << j["index"].get<std::string>() << " (maximal "
              << j["maximal_index"].get<std::string>() << ", " << j["verdict"].get<std::string>()
              << ")\n";
    std::cout << "chi = " << j["chi"].get<std::string>() << ", volume = "
              << j["volume"].get<std::string>() << "\n";
    if (j["exact"].get<bool>()) {
      std::cout << "e2 = " << j["e2"] << ", cusps = " << j["cusps_total"]
                << ", genus = " << j["genus"] << "\n";
      for (const auto& c : j["cusps"]) {
        std::cout << "  over " << c["parent"].get<std::string>() << ": " << c["count"]
                  << " cusps, widths";
        for (const auto& w : c["widths"]) std::cout << " " << w;
        std::cout << "\n";
      }
    } else {
      std::cout << "e2 >= " << j["e2"]
                << "; cusp and genus data need a complete presentation\n";
      std::cout << "note: incomplete presentation; the index is a lower bound\n";
    }
  }
  return j["verdict"].get<std::string>() == "lower_bound" && !j["exact"].get<bool>()
             ? kExitHypothesis
             : kExitOk;
}

int cmd_twist_volume(long long D, const std::string& spin_s, const std::string& matrix,
                     const Options& opt) {
  auto disc = order_context(D);
  Spin spin = parse_spin(spin_s);
  Mat2K M = parse_matrix(matrix, disc);
  TwistSpec spec = normalize_twist(M, disc);
  VolumeResult vol = twist_volume(spec, disc, spin);
  stamp(opt);
  if (opt.format == "json") {
    json j;
    j["normalized"] = to_string(spec.normalized);
    j["degree"] = vol.degree.get_str();
    j["chi"] = rat_str(vol.chi);
    j["volume"] = rat_str(vol.volume_over_pi) + "*pi";
    j["status"] = vol.status == VolumeStatus::exact ? "exact" : "conditional_lower_bound";
    j["hypotheses"] = std::vector<std::string>(vol.applicability.begin(),
                                               vol.applicability.end());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "normalized twist: " << to_string(spec.normalized) << "\n";
    std::cout << "degree = " << vol.degree << ", chi = " << rat_str(vol.chi)
              << ", volume = " << rat_str(vol.volume_over_pi) << "*pi\n";
    std::cout << "status: "
              << (vol.status == VolumeStatus::exact ? "exact" : "conditional lower bound")
              << "\n";
  }
  return vol.status == VolumeStatus::exact ? kExitOk : kExitHypothesis;
}

int cmd_classify(long long D, const std::string& spin_s, const std::string& ma,
                 const std::string& mb, const Options& opt) {
  auto disc = order_context(D);
  Spin spin = parse_spin(spin_s);
  TwistSpec A = normalize_twist(parse_matrix(ma, disc), disc);
  TwistSpec B = normalize_twist(parse_matrix(mb, disc), disc);
  ClassificationResult r = classification(A, B, disc, spin, opt.max_word_length);
  VeechPresentation pres = presentation(disc, spin);
  stamp(opt);
  if (opt.format == "json") {
    json j;
    j["verdict"] = classification_name(r.verdict);
    j["reason"] = r.reason;
    if (r.witness_word) j["witness_word"] = letters_to_text(pres, *r.witness_word);
    if (r.witness_conjugator) j["witness_conjugator"] = to_string(*r.witness_conjugator);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << classification_name(r.verdict) << " (" << r.reason << ")\n";
    if (r.witness_word)
      std::cout << "witness word: " << letters_to_text(pres, *r.witness_word) << "\n";
    if (r.witness_conjugator)
      std::cout << "conjugating element: " << to_string(*r.witness_conjugator) << "\n";
  }
  return r.verdict == ClassificationVerdict::unknown ? kExitBound : kExitOk;
}

int cmd_member(const std::string& group_s, std::optional<long long> disc_flag,
               const std::string& matrix, const Options& opt) {
  GroupSpec g = load_group(group_s, disc_flag);
  Mat2K X = parse_matrix(matrix, g.disc);
  ReduceResult r = reduce_and_decide(X, g);
  stamp(opt);
  if (opt.format == "json") {
    json j;
    j["member"] = r.member;
    if (r.member) j["word"] = word_to_text(r.word);
    j["reduction_steps"] = r.reduction_steps;
    std::cout << j.dump(2) << "\n";
  } else {
    if (r.member)
      std::cout << "member, word " << word_to_text(r.word) << "\n";
    else
      std::cout << "not a member (reduced point stays off the base point)\n";
  }
  return kExitOk;
}

int cmd_commensurable(const std::string& h_s, const std::string& g_s,
                      std::optional<long long> disc_flag, int depth, const Options& opt) {
  GroupSpec H = load_group(h_s, disc_flag);
  GroupSpec G = load_group(g_s, disc_flag ? disc_flag : std::optional<long long>(H.disc.D));
  CommensurabilityResult r = commensurability_search(H, G, depth);
  stamp(opt);
  if (opt.format == "json") {
    json j;
    j["candidates_tested"] = r.candidates_tested;
    j["search_complete"] = r.search_complete;
    json list = json::array();
    for (const auto& c : r.verified) {
      json cj;
      cj["conjugator"] = to_string(c.m);
      cj["normalized"] = c.normalized;
      json imgs = json::array();
      for (const auto& im : c.generator_images) imgs.push_back(to_string(im));
      cj["images"] = imgs;
      list.push_back(cj);
    }
    j["conjugators"] = list;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.verified.size() << " verified conjugator(s); " << r.candidates_tested
              << " candidate(s) tested"
              << (r.search_complete ? "" : "; tessellation bound hit (incomplete)") << "\n";
    for (const auto& c : r.verified) {
      std::cout << "  M = " << to_string(c.m) << (c.normalized ? "" : " (unnormalized)")
                << "\n";
      for (const auto& im : c.generator_images)
        std::cout << "    conjugate image: " << to_string(im) << "\n";
    }
  }
  if (!r.search_complete) return kExitBound;
  return kExitOk;
}

int cmd_lyapunov(const std::string& family_s, std::optional<long long> n,
                 const std::string& convention_s, const Options& opt) {
  CurveFamily fam;
  if (family_s == "L" || family_s == "genus2_L") fam = CurveFamily::genus2_L;
  else if (family_s == "S" || family_s == "genus3_S") fam = CurveFamily::genus3_S;
  else if (family_s == "X" || family_s == "genus4_X") fam = CurveFamily::genus4_X;
  else throw CLI::ValidationError("--family must be L, S or X");
  ExponentProfile p = exponent_profile(fam);
  std::optional<Discriminant> disc;
  if (n) {
    LPolygonConvention conv;
    if (fam == CurveFamily::genus2_L) {
      if (convention_s == "statement") conv = LPolygonConvention::statement;
      else if (convention_s == "sidelength") conv = LPolygonConvention::sidelength;
      else
        throw CLI::ValidationError(
            "--convention statement|sidelength is required for the L family");
    } else {
      conv = LPolygonConvention::statement;
    }
    disc = prym_discriminant(fam, *n, conv);
  }
  stamp(opt);
  if (opt.format == "json") {
    json j;
    j["family"] = family_name(fam);
    j["top"] = rat_str(p.top);
    j["second"] = rat_str(p.second);
    j["sum_positive"] = rat_str(p.sum_positive);
    j["stratum"] = p.stratum_component;
    if (disc) j["disc"] = disc->D;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << family_name(fam) << ": exponents (1, " << rat_str(p.second)
              << "), Prym sum " << rat_str(p.sum_positive) << ", stratum "
              << p.stratum_component << "\n";
    if (disc) std::cout << "discriminant from n: " << disc->D << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of twisted Teichmueller curves on Hilbert modular surfaces"};
  app.require_subcommand(1);
  
  Options opt;
  app.add_option("--format", opt.format, "output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--cache-dir", opt.cache_dir, "cache directory (or TEICHCURVE_CACHE)");
  app.add_option("--max-word-length", opt.max_word_length, "witness word-search bound");
  app.add_flag("--timestamps", opt.timestamps, "prepend a timestamp comment (opt-in)");

  long long D = 0;
  std::string spin = "odd", matrix, matrix_b, n_s = "1", m_s, kind = "hecke0";
  std::string group_s, group_h, group_g, family, convention;
  int range = 4, depth = 10;
  std::optional<long long> disc_flag, n_flag;

  auto* euler = app.add_subcommand("euler", "Euler characteristics and e2 for a discriminant")->fallthrough();
  euler->add_option("--disc", D)->required();
  std::optional<std::string> euler_spin;
  euler->add_option("--spin", euler_spin);

  auto* veech = app.add_subcommand("veech", "labeled Veech-group generators")->fallthrough();
  veech->add_option("--disc", D)->required();
  veech->add_option("--spin", spin);
  bool veech_json = false;
  veech->add_flag("--json", veech_json);

  auto* table = app.add_subcommand("table", "grid of congruence-subgroup indexes")->fallthrough();
  table->add_option("--disc", D)->required();
  table->add_option("--spin", spin);
  table->add_option("--range", range);

  auto* index = app.add_subcommand("index", "closed-form congruence index")->fallthrough();
  index->add_option("--disc", D)->required();
  index->add_option("--kind", kind);
  index->add_option("--n", n_s)->required();
  index->add_option("--m", m_s);

  auto* inv = app.add_subcommand("invariants", "index/elliptic/cusp/genus data of a level")->fallthrough();
  inv->add_option("--disc", D)->required();
  inv->add_option("--spin", spin);
  inv->add_option("--m", m_s)->required();
  inv->add_option("--n", n_s);

  auto* tv = app.add_subcommand("twist-volume", "volume of a twisted curve")->fallthrough();
  tv->add_option("--disc", D)->required();
  tv->add_option("--spin", spin);
  tv->add_option("--matrix", matrix)->required();

  auto* cls = app.add_subcommand("classify", "same/different/unknown for two twists")->fallthrough();
  cls->add_option("--disc", D)->required();
  cls->add_option("--spin", spin);
  cls->add_option("--matrix-a", matrix)->required();
  cls->add_option("--matrix-b", matrix_b)->required();

  auto* mem = app.add_subcommand("member", "membership/word decomposition in a Fuchsian group")->fallthrough();
  mem->add_option("--group", group_s)->required();
  mem->add_option("--disc", disc_flag);
  mem->add_option("--matrix", matrix)->required();

  auto* comm = app.add_subcommand("commensurable", "conjugate-subgroup search")->fallthrough();
  comm->add_option("--group-h", group_h)->required();
  comm->add_option("--group-g", group_g)->required();
  comm->add_option("--disc", disc_flag);
  comm->add_option("--depth", depth);

  auto* lya = app.add_subcommand("lyapunov", "closed-form Lyapunov data per family")->fallthrough();
  lya->add_option("--family", family)->required();
  lya->add_option("--disc-from-n", n_flag);
  lya->add_option("--convention", convention);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (euler->parsed()) return cmd_euler(D, euler_spin, opt);
    if (veech->parsed()) return cmd_veech(D, spin, veech_json, opt);
    if (table->parsed()) return cmd_table(D, spin, range, opt);
    if (index->parsed()) return cmd_index(D, kind, n_s, m_s, opt);
    if (inv->parsed()) return cmd_invariants(D, spin, m_s, n_s, opt);
    if (tv->parsed()) return cmd_twist_volume(D, spin, matrix, opt);
    if (cls->parsed()) return cmd_classify(D, spin, matrix, matrix_b, opt);
    if (mem->parsed()) return cmd_member(group_s, disc_flag, matrix, opt);
    if (comm->parsed()) return cmd_commensurable(group_h, group_g, disc_flag, depth, opt);
    if (lya->parsed()) return cmd_lyapunov(family, n_flag, convention, opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  }
  return kExitUsage;
}
