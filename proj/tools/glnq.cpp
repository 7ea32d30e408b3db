// Command-line front end: one subcommand per library operation.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "glnq/asc.hpp"
#include "glnq/chartable.hpp"
#include "glnq/class_table.hpp"
#include "glnq/classes.hpp"
#include "glnq/constructions.hpp"
#include "glnq/distributions.hpp"
#include "glnq/enumerate.hpp"
#include "glnq/flags.hpp"
#include "glnq/kernels.hpp"
#include "glnq/matrix_io.hpp"
#include "glnq/qanalog.hpp"
#include "glnq/spectra.hpp"
#include "report.hpp"

namespace glnq::cli {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kViolation = 2;

struct Global {
  std::uint64_t budget = Budget{}.max_items;
  int threads = 0;
  std::string cache_dir;
  bool kv = false;
};

struct GroupArgs {
  unsigned n = 0, q = 0;
};

void add_group(CLI::App* cmd, GroupArgs& g) {
  cmd->add_option("--n", g.n, "matrix dimension")->required()->check(CLI::Range(1u, kMaxDim));
  cmd->add_option("--q", g.q, "field order")->required()->check(CLI::Range(2u, kMaxFieldSize));
}

Partition partition_arg(const std::string& text) { return parse_partition(text.empty() ? "-" : text); }

std::string rational_text(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

// Loads a matrix set and returns its field.
std::pair<MatrixSet, const Field*> load_group_file(const std::string& path) {
  MatrixSet set = load_matrix_set(path);
  return {std::move(set), &field_of_order(set.q)};
}

bool is_subspace_file(const std::string& path) {
  std::ifstream in(path);
  std::string word;
  in >> word;
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  return word == "grass";
}

CharTableOptions table_options(const Global& global) {
  CharTableOptions o;
  o.cache_dir = global.cache_dir;
  o.log = &std::cerr;
  o.budget.max_items = global.budget;
  return o;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Designs, codes and cliques in finite general linear groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--budget", global.budget, "maximum number of enumerated items");
  app.add_option("--threads", global.threads, "worker threads (0 = runtime default)");
  app.add_option("--cache-dir", global.cache_dir, "character table cache (default $GLNQ_CACHE_DIR or ./.glnq-cache)");
  app.add_flag("--kv", global.kv, "print key=value lines");

  std::function<int(Report&)> action;
  auto on = [&](CLI::App* cmd, std::function<int(Report&)> f) { cmd->callback([&action, f] { action = f; }); };

  // classes
  GroupArgs classes_args;
  bool classes_brute = false;
  auto* classes = app.add_subcommand("classes", "list the conjugacy classes of GL(n,q)");
  add_group(classes, classes_args);
  classes->add_flag("--brute-force", classes_brute, "compare class sizes with a full enumeration");
  on(classes, [&](Report& r) {
    const Field& f = field_of_order(classes_args.q);
    const ClassTable& t = class_table(f, classes_args.n);
    r.add("group", "GL(" + std::to_string(t.n()) + "," + std::to_string(f.q()) + ")");
    r.add("order", t.group_order());
    r.add("classes", t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      r.add("class." + std::to_string(i), to_string(t.label(i)) + " type=" + to_string(t.type(i)) +
                                              " size=" + t.class_size(i).str() +
                                              " order=" + std::to_string(t.element_order(i)));
    }
    if (!classes_brute) return kOk;
    Budget::defaults().check(t.group_order(), "classes --brute-force");
    const Tally tally = kernels::gl_class_tally(t);
    bool same = true;
    for (std::size_t i = 0; i < t.size(); ++i) same = same && BigInt(tally[i]) == t.class_size(i);
    r.add("brute_force_match", same ? "yes" : "no");
    return same ? kOk : kViolation;
  });

  // jordan-type
  GroupArgs jt_args;
  std::string jt_matrix;
  auto* jt = app.add_subcommand("jordan-type", "class label of a matrix");
  add_group(jt, jt_args);
  jt->add_option("--matrix", jt_matrix, "row-major hex digits")->required();
  on(jt, [&](Report& r) {
    const Field& f = field_of_order(jt_args.q);
    const Matrix g = parse_matrix_digits(f, jt_args.n, jt_args.n, jt_matrix);
    if (!is_invertible(g)) throw Error(ErrorCode::Singular, "matrix is not invertible");
    const ClassTable& t = class_table(f, jt_args.n);
    const std::size_t c = t.index_of(jordan_type(g));
    r.add("matrix", g.digits());
    r.add("label", to_string(t.label(c)));
    r.add("class", c);
    r.add("type", to_string(t.type(c)));
    r.add("class_size", t.class_size(c));
    r.add("element_order", t.element_order(c));
    r.add("fixed_vectors", theta_value(g));
    return kOk;
  });

  // flag-count
  GroupArgs fc_args;
  std::string fc_sigma, fc_tau;
  bool fc_enumerate = false;
  auto* fc = app.add_subcommand("flag-count", "number of (sigma,tau)-flags");
  add_group(fc, fc_args);
  fc->add_option("--sigma", fc_sigma, "selected parts, e.g. 2,1 (or -)");
  fc->add_option("--tau", fc_tau, "unselected parts (or -)");
  fc->add_flag("--enumerate", fc_enumerate, "also enumerate the flags and compare");
  on(fc, [&](Report& r) {
    const Partition sigma = partition_arg(fc_sigma), tau = partition_arg(fc_tau);
    const BigInt count = flag_count(sigma, tau, fc_args.n, fc_args.q);
    r.add("type", to_string(PairType{sigma, tau}));
    r.add("flags", count);
    if (!fc_enumerate) return kOk;
    const auto flags = enumerate_flags(field_of_order(fc_args.q), canonical_spec({sigma, tau}));
    r.add("enumerated", flags.size());
    return BigInt(flags.size()) == count ? kOk : kViolation;
  });

  // verify-transitive
  std::string vt_file, vt_spec;
  auto* vt = app.add_subcommand("verify-transitive", "check that a matrix set acts transitively on flags");
  vt->add_option("--file", vt_file, "matrix-set file")->required();
  vt->add_option("--spec", vt_spec, "flag spec, e.g. \"rho=1,2 I=1\"")->required();
  on(vt, [&](Report& r) {
    const auto [set, field] = load_group_file(vt_file);
    const FlagSpec spec = parse_flag_spec(vt_spec);
    validate_spec(spec, set.q);
    if (spec.n() != set.n) throw Error(ErrorCode::MixedDimensions, "flag spec and matrices differ in dimension");
    r.add("file", vt_file);
    r.add("size", set.elements.size());
    r.add("spec", to_string(spec));
    r.add("type", to_string(type_of_spec(spec)));
    const auto c = transitivity_constant(set.elements, spec);
    r.add("transitive", c ? "yes" : "no");
    if (c) r.add("r", *c);
    return c ? kOk : kViolation;
  });

  // verify-design
  std::string vd_file;
  unsigned vd_t = 1;
  auto* vd = app.add_subcommand("verify-design", "check a t-design in GL(n,q) or in a Grassmannian");
  vd->add_option("--file", vd_file, "matrix-set or subspace-set file")->required();
  vd->add_option("--t", vd_t, "strength")->required();
  on(vd, [&](Report& r) {
    r.add("file", vd_file);
    r.add("t", vd_t);
    if (is_subspace_file(vd_file)) {
      const SubspaceSet set = load_subspace_set(vd_file);
      const SubspaceDesign d{set.n, set.k, &field_of_order(set.q), set.blocks, vd_t};
      r.add("kind", "subspaces");
      r.add("blocks", d.blocks.size());
      const auto c = grassmannian_design_check(d, vd_t);
      r.add("design", c ? "yes" : "no");
      if (c) r.add("r", *c);
      return c ? kOk : kViolation;
    }
    const auto [set, field] = load_group_file(vd_file);
    r.add("kind", "matrices");
    r.add("size", set.elements.size());
    const bool ok = is_t_design(set.elements, vd_t);
    r.add("design", ok ? "yes" : "no");
    if (ok) r.add("r", Rational(BigInt(set.elements.size())) / Rational(independent_tuples(set.n, vd_t, set.q)));
    return ok ? kOk : kViolation;
  });

  // verify-clique
  std::string vc_file, vc_sigma, vc_tau;
  bool vc_flags = false;
  auto* vc = app.add_subcommand("verify-clique", "check that a matrix set is a (sigma,tau)-clique");
  vc->add_option("--file", vc_file, "matrix-set file")->required();
  vc->add_option("--sigma", vc_sigma, "selected parts");
  vc->add_option("--tau", vc_tau, "unselected parts");
  vc->add_flag("--by-flags", vc_flags, "also run the definitional fixed-flag test");
  on(vc, [&](Report& r) {
    const auto [set, field] = load_group_file(vc_file);
    const Partition sigma = partition_arg(vc_sigma), tau = partition_arg(vc_tau);
    r.add("file", vc_file);
    r.add("size", set.elements.size());
    r.add("type", to_string(PairType{sigma, tau}));
    const bool ok = is_clique(set.elements, sigma, tau);
    r.add("clique", ok ? "yes" : "no");
    r.add("clique_bound", clique_design_bounds(sigma, tau, set.n, set.q).first);
    if (vc_flags) {
      const bool direct = is_clique_by_flags(set.elements, sigma, tau);
      r.add("clique_by_flags", direct ? "yes" : "no");
      if (direct != ok) return kViolation;
    }
    return ok ? kOk : kViolation;
  });

  // distance-dist
  std::string dd_file;
  auto* dd = app.add_subcommand("distance-dist", "rank-distance distribution and its dual");
  dd->add_option("--file", dd_file, "matrix-set file")->required();
  on(dd, [&](Report& r) {
    const auto [set, field] = load_group_file(dd_file);
    const DistanceDistribution d = distance_distribution(set.elements);
    r.add("file", dd_file);
    r.add("size", set.elements.size());
    r.add("A", join(d.A));
    r.add("A'", join(d.Aprime));
    return kOk;
  });

  // predicted-dist
  GroupArgs pd_args;
  std::string pd_size;
  unsigned pd_t = 0;
  auto* pd = app.add_subcommand("predicted-dist", "distance distribution forced for a t-design (n-t)-code");
  add_group(pd, pd_args);
  pd->add_option("--size", pd_size, "subset size (default |GL(n,q)|)");
  pd->add_option("--t", pd_t, "strength")->required();
  on(pd, [&](Report& r) {
    const BigInt size = pd_size.empty() ? gl_order(pd_args.n, pd_args.q) : BigInt(pd_size);
    const DistanceDistribution d = predicted_distance_distribution(pd_args.n, pd_args.q, size, pd_t);
    r.add("size", size);
    r.add("t", pd_t);
    r.add("A", join(d.A));
    r.add("A'", join(d.Aprime));
    return kOk;
  });

  // w-vector
  GroupArgs wv_args;
  bool wv_tally = false;
  auto* wv = app.add_subcommand("w-vector", "number of elements with a fixed space of each dimension");
  add_group(wv, wv_args);
  wv->add_flag("--tally", wv_tally, "compare with a full enumeration");
  on(wv, [&](Report& r) {
    const auto w = w_vector(wv_args.n, wv_args.q);
    r.add("w", join(w));
    if (!wv_tally) return kOk;
    const auto tally = fixed_space_tally(field_of_order(wv_args.q), wv_args.n);
    r.add("tally", join(tally));
    r.add("match", w == tally ? "yes" : "no");
    return w == tally ? kOk : kViolation;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "build a construction and write it to a file");
  construct->require_subcommand(1);
  GroupArgs cs_args;
  std::string out_path;
  unsigned cs_step = 1;
  auto* singer = construct->add_subcommand("singer", "Singer cycle (or the subgroup generated by a power)");
  add_group(singer, cs_args);
  singer->add_option("--step", cs_step, "use powers of C^step");
  singer->add_option("--out", out_path, "output file")->required();
  on(singer, [&](Report& r) {
    const Field& f = field_of_order(cs_args.q);
    const auto elems = singer_subgroup(f, cs_args.n, cs_step);
    save_matrix_set(out_path, {cs_args.n, cs_args.q, elems});
    r.add("primitive_polynomial", poly_pretty(primitive_polynomial(f, cs_args.n)));
    r.add("size", elems.size());
    r.add("out", out_path);
    return kOk;
  });
  auto* gl1 = construct->add_subcommand("gammal1", "semilinear group of F_{q^n}");
  GroupArgs gl1_args;
  add_group(gl1, gl1_args);
  gl1->add_option("--out", out_path, "output file")->required();
  on(gl1, [&](Report& r) {
    const auto elems = gamma_l1(field_of_order(gl1_args.q), gl1_args.n);
    save_matrix_set(out_path, {gl1_args.n, gl1_args.q, elems});
    r.add("size", elems.size());
    r.add("out", out_path);
    return kOk;
  });
  GroupArgs sp_args;
  unsigned sp_k = 1;
  auto* spread = construct->add_subcommand("spread", "spread of F_{q^k}-lines in F_q^n");
  add_group(spread, sp_args);
  spread->add_option("--k", sp_k, "block dimension (divides n)")->required();
  spread->add_option("--out", out_path, "output file")->required();
  on(spread, [&](Report& r) {
    const SubspaceDesign d = field_spread(field_of_order(sp_args.q), sp_args.n, sp_k);
    save_subspace_set(out_path, {d.n, d.k, sp_args.q, d.blocks});
    r.add("blocks", d.blocks.size());
    r.add("out", out_path);
    return kOk;
  });
  GroupArgs rc_args;
  unsigned rc_k = 1, rc_t = 0;
  std::string rc_y, rc_z, rc_design;
  auto* recursive = construct->add_subcommand("recursive", "design from designs on a subspace, its complement and a Grassmannian design");
  add_group(recursive, rc_args);
  recursive->add_option("--k", rc_k, "dimension of the subspace U")->required();
  recursive->add_option("--t", rc_t, "strength to verify for the inputs");
  recursive->add_option("--y-file", rc_y, "design in GL(k,q) (default: all of it)");
  recursive->add_option("--z-file", rc_z, "design in GL(n-k,q) (default: all of it)");
  recursive->add_option("--design-file", rc_design, "subspace design of k-spaces (default: all k-spaces)");
  recursive->add_option("--out", out_path, "output file")->required();
  on(recursive, [&](Report& r) {
    const Field& f = field_of_order(rc_args.q);
    if (rc_k == 0 || rc_k >= rc_args.n) throw Error(ErrorCode::OutOfRange, "need 0 < k < n");
    auto side = [&](const std::string& path, unsigned dim) {
      if (path.empty()) return enumerate_gl(f, dim);
      MatrixSet s = load_matrix_set(path);
      if (s.n != dim || s.q != rc_args.q) throw Error(ErrorCode::MixedDimensions, path + " has the wrong group");
      return s.elements;
    };
    const auto ys = side(rc_y, rc_k);
    const auto zs = side(rc_z, rc_args.n - rc_k);
    const SubspaceDesign d = rc_design.empty() ? full_grassmannian(f, rc_args.n, rc_k)
                                                : load_subspace_design(rc_design, rc_t > rc_k ? 0 : rc_t);
    if (d.n != rc_args.n || d.k != rc_k) throw Error(ErrorCode::MixedDimensions, "design has the wrong dimensions");
    const auto elems = recursive_design(ys, zs, d, rc_t);
    save_matrix_set(out_path, {rc_args.n, rc_args.q, elems});
    r.add("Y", ys.size());
    r.add("Z", zs.size());
    r.add("D", d.blocks.size());
    r.add("size", elems.size());
    r.add("out", out_path);
    return kOk;
  });
  GroupArgs mrd_args;
  unsigned mrd_d = 1;
  auto* mrd = construct->add_subcommand("mrd", "invertible part of a Gabidulin code");
  add_group(mrd, mrd_args);
  mrd->add_option("--d", mrd_d, "minimum rank distance")->required();
  mrd->add_option("--out", out_path, "output file")->required();
  on(mrd, [&](Report& r) {
    const LinearRankCode code = mrd_code(field_of_order(mrd_args.q), mrd_args.n, mrd_d);
    const auto inv = invertible_subcode(code);
    save_matrix_set(out_path, {mrd_args.n, mrd_args.q, inv});
    const BigInt predicted = mrd_invertible_count(mrd_args.n, mrd_d, mrd_args.q);
    r.add("code_dimension", code.generators.size());
    r.add("invertible", inv.size());
    r.add("predicted", predicted);
    r.add("min_rank", code_min_rank(code));
    r.add("out", out_path);
    return BigInt(inv.size()) == predicted ? kOk : kViolation;
  });
  GroupArgs ss_args;
  std::string ss_order;
  std::uint64_t ss_seed = 1;
  auto* search = construct->add_subcommand("subgroup-search", "random two-generator subgroup of a given order");
  add_group(search, ss_args);
  search->add_option("--order", ss_order, "target order")->required();
  search->add_option("--seed", ss_seed, "random seed");
  search->add_option("--out", out_path, "output file")->required();
  on(search, [&](Report& r) {
    const auto elems = random_subgroup_search(field_of_order(ss_args.q), ss_args.n, BigInt(ss_order), ss_seed);
    save_matrix_set(out_path, {ss_args.n, ss_args.q, elems});
    r.add("seed", ss_seed);
    r.add("size", elems.size());
    r.add("out", out_path);
    return kOk;
  });

  // char-table
  GroupArgs ct_args;
  bool ct_rows = false, ct_recompute = false;
  auto* ct = app.add_subcommand("char-table", "irreducible characters of GL(n,q), cached on disk");
  add_group(ct, ct_args);
  ct->add_flag("--rows", ct_rows, "print every value");
  ct->add_flag("--recompute", ct_recompute, "ignore and overwrite the cache");
  on(ct, [&](Report& r) {
    CharTableOptions o = table_options(global);
    o.read_cache = !ct_recompute;
    const CharacterTable t = character_table(field_of_order(ct_args.q), ct_args.n, o);
    r.add("characters", t.size());
    r.add("exponent", t.exponent);
    r.add("prime", t.prime);
    r.add("degrees", join(t.degrees));
    BigInt squares = 0;
    for (auto d : t.degrees) squares += BigInt(d) * d;
    r.add("sum_of_squared_degrees", squares);
    r.add("group_order", t.group_order);
    const bool ortho = rows_orthonormal(t);
    r.add("orthonormal", ortho ? "yes" : "no");
    if (ct_rows) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> values;
        for (const auto& v : t.rows[i]) values.push_back(to_string(v));
        r.add("row." + std::to_string(i), join(values));
      }
    }
    return ortho && squares == t.group_order ? kOk : kViolation;
  });

  // lp-bound
  GroupArgs lp_args;
  std::string lp_sigma, lp_tau;
  auto* lp = app.add_subcommand("lp-bound", "linear programming bound for (sigma,tau)-cliques");
  add_group(lp, lp_args);
  lp->add_option("--sigma", lp_sigma, "selected parts");
  lp->add_option("--tau", lp_tau, "unselected parts");
  on(lp, [&](Report& r) {
    const Partition sigma = partition_arg(lp_sigma), tau = partition_arg(lp_tau);
    const LpBound b =
        lp_clique_bound(field_of_order(lp_args.q), lp_args.n, sigma, tau, table_options(global));
    r.add("type", to_string(PairType{sigma, tau}));
    r.add("lower", rational_text(b.value.lo));
    r.add("upper", rational_text(b.value.hi));
    r.add("width", to_double(b.value.width()));
    const double mid = to_double((b.value.lo + b.value.hi) / 2);
    r.add("bound", static_cast<long long>(std::floor(to_double(b.value.hi) + 1e-6)));
    r.add("approx", mid);
    r.add("clique_bound", clique_design_bounds(sigma, tau, lp_args.n, lp_args.q).first);
    return kOk;
  });

  // asc-identities
  unsigned asc_q = 2, asc_max_j = 8, asc_max_n = 5;
  auto* asc = app.add_subcommand("asc-identities", "check the Al-Salam-Carlitz identities");
  asc->add_option("--q", asc_q, "field order")->required();
  asc->add_option("--max-j", asc_max_j, "largest index for the moment and inversion identities");
  asc->add_option("--max-n", asc_max_n, "largest n for weighted orthogonality");
  on(asc, [&](Report& r) {
    bool ok = true;
    for (unsigned k = 0; k <= 3; ++k) r.add("U_" + std::to_string(k), to_string(asc_poly(k, asc_q)));
    bool moments = true, inversion = true, orth = true;
    for (unsigned j = 0; j <= asc_max_j; ++j) {
      moments = moments && asc_moment_identity(j, asc_q);
      for (unsigned l = j; l <= asc_max_j; ++l) inversion = inversion && asc_inversion(j, l, asc_q) == (j == l ? 1 : 0);
    }
    for (unsigned n = 0; n <= asc_max_n; ++n) {
      const BigInt order = gl_order(n, asc_q);
      for (unsigned k = 0; k <= n; ++k) {
        for (unsigned l = 0; k + l <= n; ++l) {
          const BigInt v = asc_weighted_inner(n, k, l, asc_q);
          if (k != l) orth = orth && v == 0;
          else orth = orth && v == gl_order(k, asc_q) * order;
        }
      }
    }
    ok = moments && inversion && orth;
    r.add("moments", moments ? "exact" : "FAILED");
    r.add("inversion", inversion ? "exact" : "FAILED");
    r.add("weighted_orthogonality", orth ? "exact" : "FAILED");
    return ok ? kOk : kViolation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }
  Budget::defaults().max_items = global.budget;
  set_max_threads(global.threads);
  const auto start = std::chrono::steady_clock::now();
  Report report(global.kv);
  try {
    const int code = action(report);
    report.print(std::cout);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "elapsed " << secs << " s\n";
    return code;
  } catch (const Error& e) {
    report.print(std::cout);
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace glnq::cli

int main(int argc, char** argv) { return glnq::cli::run(argc, argv); }
