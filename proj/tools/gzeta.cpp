// gzeta: command-line front end. Subcommands: zeta, heat, charpoly, forests,
// regdet, ihara, residue, funceq. Output is a single table on stdout (csv or
// json); diagnostics go to stderr. Exit codes: 0 success, 2 usage error,
// 3 domain error (pole / unsupported evaluation), 4 resource cap exceeded.

#include <atomic>
#include <complex>
#include <cstdio>
#include <exception>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gzeta/gzeta.hpp"

namespace {

using namespace gzeta;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const std::string& format) {
  if (format == "csv") {
    for (size_t i = 0; i < t.columns.size(); ++i)
      std::cout << (i ? "," : "") << t.columns[i];
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
    return;
  }
  nlohmann::json doc;
  doc["schema"] = t.columns;
  doc["rows"] = t.rows;
  std::cout << doc.dump(2) << "\n";
}

// "a" or "start:stop:step", stop inclusive (small forward tolerance).
std::vector<double> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(':', pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  auto value = [&](const std::string& p) {
    try {
      size_t used = 0;
      double v = std::stod(p, &used);
      if (used != p.size()) throw std::invalid_argument(p);
      return v;
    } catch (const std::exception&) {
      throw usage_error("bad number in range: '" + p + "'");
    }
  };
  if (parts.size() == 1) return {value(parts[0])};
  if (parts.size() != 3)
    throw usage_error("range must be a value or start:stop:step: '" + text +
                      "'");
  double start = value(parts[0]), stop = value(parts[1]),
         step = value(parts[2]);
  if (step == 0.0) throw usage_error("range step must be nonzero");
  double span = (stop - start) / step;
  if (span < -1e-9) throw usage_error("empty range: '" + text + "'");
  long count = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(start + step * double(i));
  return out;
}

// cycle:<n> | zd:<d> | file:<path> | prod:<spec>,<spec>,...
GraphModel parse_graph_spec(const std::string& spec) {
  auto integer_after = [&](const std::string& prefix) {
    std::string tail = spec.substr(prefix.size());
    try {
      size_t used = 0;
      int v = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
      return v;
    } catch (const std::exception&) {
      throw usage_error("bad graph spec '" + spec + "': expected an integer after '" +
                        prefix + "'");
    }
  };
  if (spec.rfind("cycle:", 0) == 0) return build_cycle(integer_after("cycle:"));
  if (spec.rfind("zd:", 0) == 0) return build_lattice(integer_after("zd:"));
  if (spec.rfind("file:", 0) == 0)
    return load_graph_json_file(spec.substr(5));
  if (spec.rfind("prod:", 0) == 0) {
    std::string list = spec.substr(5);
    std::vector<GraphModel> factors;
    size_t pos = 0;
    while (pos <= list.size()) {
      size_t next = list.find(',', pos);
      std::string item = list.substr(pos, next - pos);
      if (item.empty())
        throw usage_error("bad graph spec '" + spec + "': empty product factor");
      if (item.rfind("prod:", 0) == 0)
        throw usage_error("bad graph spec '" + spec + "': nested prod");
      factors.push_back(parse_graph_spec(item));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return build_product(factors);
  }
  throw usage_error("bad graph spec '" + spec +
                    "': expected cycle:<n>, zd:<d>, file:<path>, or prod:...");
}

// Fill `count` rows with fn(i), fanning out over a small worker pool. Rows
// keep their index order, so output is deterministic regardless of jobs.
template <typename F>
std::vector<std::vector<std::string>> fill_rows(long count, int jobs, F&& fn) {
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(count));
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) rows[static_cast<size_t>(i)] = fn(i);
    return rows;
  }
  std::atomic<long> next{0};
  std::mutex mu;
  std::exception_ptr first_error;
  auto worker = [&]() {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        rows[static_cast<size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int width = std::min<long>(jobs, count);
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

struct CommonOpts {
  std::string format = "csv";
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  if (opts->jobs < 1) opts->jobs = 1;
  cmd->add_option("--jobs", opts->jobs, "worker threads for row evaluation")
      ->check(CLI::PositiveNumber);
}

std::string nan_cell() { return "nan"; }

int run_zeta(const std::string& graph_spec, const std::string& s_range,
             const std::string& mode, double t_max, int nodes, int strip_m,
             int series_n, const CommonOpts& common) {
  GraphModel model = parse_graph_spec(graph_spec);
  std::vector<double> ss = parse_range(s_range);
  Table t;
  if (mode == "exact") {
    t.columns = {"s", "value"};
    for (double s : ss) {
      double r = std::round(s);
      if (std::fabs(s - r) > 1e-9 || r > 0.0)
        throw usage_error("exact mode needs non-positive integer s, got " +
                          to_string_real(s));
      int k = static_cast<int>(-r);
      std::string cell;
      if (!model.is_finite()) {
        cell = to_string(zeta_lattice_negint(model.lattice_dim(), k));
      } else if (k == 0) {
        int n = model.graph().vertex_count();
        BigRat v(n - 1, n);
        v.canonicalize();
        cell = to_string(v);
      } else {
        cell = to_string(spectral_moment(model, k));
      }
      t.rows.push_back({to_string_real(s), cell});
    }
    emit(t, common.format);
    return 0;
  }
  t.columns = {"s", "re", "im", "status"};
  t.rows = fill_rows(
      static_cast<long>(ss.size()), common.jobs,
      [&](long i) -> std::vector<std::string> {
        double s = ss[static_cast<size_t>(i)];
        try {
          std::complex<double> v;
          std::string status = "ok";
          if (mode == "closed") {
            if (model.is_finite()) {
              FiniteZetaValue fv = zeta_finite_transitive(model, {s, 0.0});
              v = fv.value;
              if (!fv.transitive) status = "rooted";
            } else if (model.lattice_dim() == 1) {
              v = zeta_z_closed({s, 0.0});
            } else {
              throw unsupported_error(
                  "zeta closed form: lattice dimension must be 1");
            }
          } else if (mode == "mellin") {
            v = zeta_mellin(model, {s, 0.0}, t_max, nodes);
          } else {  // continuation
            if (model.is_finite())
              throw unsupported_error("zeta continuation: lattice models only");
            v = zeta_lattice_continuation(model.lattice_dim(), {s, 0.0},
                                          strip_m, series_n);
          }
          return {to_string_real(s), to_string_real(v.real()),
                  to_string_real(v.imag()), status};
        } catch (const pole_error& e) {
          return {to_string_real(s), nan_cell(), nan_cell(),
                  "pole@" + to_string_real(e.location())};
        }
      });
  emit(t, common.format);
  return 0;
}

int run_heat(const std::string& graph_spec, const std::string& t_range,
             const CommonOpts& common) {
  GraphModel model = parse_graph_spec(graph_spec);
  std::vector<double> ts = parse_range(t_range);
  Table t;
  t.columns = {"t", "heat"};
  t.rows = fill_rows(static_cast<long>(ts.size()), common.jobs,
                     [&](long i) -> std::vector<std::string> {
                       double tt = ts[static_cast<size_t>(i)];
                       return {to_string_real(tt),
                               to_string_real(heat_function(model, tt))};
                     });
  emit(t, common.format);
  return 0;
}

int run_charpoly(const std::string& graph_spec, const CommonOpts& common) {
  GraphModel model = parse_graph_spec(graph_spec);
  IntPolynomial p = model.kind() == ModelKind::Cycle
                        ? charpoly_cycle(model.cycle_length())
                        : charpoly_exact(model);
  Table t;
  t.columns = {"degree", "coefficient"};
  for (size_t i = 0; i < p.coefficients.size(); ++i)
    t.rows.push_back(
        {std::to_string(i), to_string(p.coefficients[i])});
  emit(t, common.format);
  return 0;
}

int run_forests(int n, int k, bool brute, const CommonOpts& common) {
  Table t;
  GraphModel cyc = build_cycle(n);
  std::vector<int> ks;
  if (k > 0) {
    ks.push_back(k);
  } else {
    for (int kk = 1; kk <= n; ++kk) ks.push_back(kk);
  }
  t.columns = brute ? std::vector<std::string>{"n", "k", "count", "bruteforce",
                                               "match"}
                    : std::vector<std::string>{"n", "k", "count"};
  for (int kk : ks) {
    BigInt closed = forest_count_cycle(n, kk);
    if (brute) {
      BigInt direct = forest_count_bruteforce(cyc, kk);
      t.rows.push_back({std::to_string(n), std::to_string(kk),
                        to_string(closed), to_string(direct),
                        closed == direct ? "true" : "false"});
    } else {
      t.rows.push_back(
          {std::to_string(n), std::to_string(kk), to_string(closed)});
    }
  }
  emit(t, common.format);
  return 0;
}

int run_regdet(const std::string& graph_spec, const std::string& x_range,
               int series_order, const CommonOpts& common) {
  GraphModel model = parse_graph_spec(graph_spec);
  Table t;
  if (series_order > 0) {
    LaurentSeries s = regdet_series(model, series_order);
    t.columns = {"degree", "coefficient"};
    for (const auto& [deg, c] : s.coefficients)
      t.rows.push_back({std::to_string(deg), to_string(c)});
    emit(t, common.format);
    return 0;
  }
  if (x_range.empty())
    throw usage_error("regdet: need --x <range> or --series <order>");
  std::vector<double> xs = parse_range(x_range);
  t.columns = {"x", "value"};
  t.rows = fill_rows(static_cast<long>(xs.size()), common.jobs,
                     [&](long i) -> std::vector<std::string> {
                       double x = xs[static_cast<size_t>(i)];
                       return {to_string_real(x),
                               to_string_real(regdet(model, x))};
                     });
  emit(t, common.format);
  return 0;
}

int run_ihara(const std::string& graph_spec, const std::string& u_range,
              bool regularized, const CommonOpts& common) {
  GraphModel model = parse_graph_spec(graph_spec);
  std::vector<double> us = parse_range(u_range);
  Table t;
  if (regularized) {
    t.columns = {"u", "value"};
    t.rows = fill_rows(static_cast<long>(us.size()), common.jobs,
                       [&](long i) -> std::vector<std::string> {
                         double u = us[static_cast<size_t>(i)];
                         return {to_string_real(u),
                                 to_string_real(regularized_ihara(model, u))};
                       });
    emit(t, common.format);
    return 0;
  }
  t.columns = {"u", "re", "im", "status"};
  t.rows = fill_rows(
      static_cast<long>(us.size()), common.jobs,
      [&](long i) -> std::vector<std::string> {
        double u = us[static_cast<size_t>(i)];
        try {
          std::complex<double> z = ihara_zeta_finite(model, {u, 0.0});
          return {to_string_real(u), to_string_real(z.real()),
                  to_string_real(z.imag()), "ok"};
        } catch (const pole_error& e) {
          return {to_string_real(u), nan_cell(), nan_cell(),
                  "pole@" + to_string_real(e.location())};
        }
      });
  emit(t, common.format);
  return 0;
}

int run_residue(int d, int k_max, const CommonOpts& common) {
  Table t;
  t.columns = {"d", "k", "pole", "core", "residue_exact", "value"};
  for (int k = 0; k <= k_max; ++k) {
    LatticeResidue r = residue_lattice(d, k);
    std::string exact = "-" + to_string(r.rational) + "*pi^-" +
                        std::to_string(r.pi_power);
    t.rows.push_back({std::to_string(d), std::to_string(k),
                      to_string_real(r.pole), to_string(r.core), exact,
                      to_string_real(r.value)});
  }
  emit(t, common.format);
  return 0;
}

int run_funceq(int k_max, const CommonOpts& common) {
  Table t;
  t.columns = {"k", "holds"};
  for (int k = 0; k <= k_max; ++k)
    t.rows.push_back(
        {std::to_string(k), check_functional_z2(k) ? "true" : "false"});
  emit(t, common.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spectral zeta, heat, determinant and ihara toolkit for finite graphs "
      "and integer lattices"};
  app.require_subcommand(1);

  CommonOpts common;

  std::string graph_spec, s_range = "0", t_range = "1", u_range = "0.5",
              x_range, mode = "closed";
  double t_max = 200.0;
  int nodes = 4000, strip_m = 3, series_n = 60, series_order = 0;
  int fn = 3, fk = 0, rd = 1, rk = 0, kmax = 10;
  bool brute = false, regularized = false;

  CLI::App* zeta = app.add_subcommand("zeta", "spectral zeta values");
  zeta->add_option("--graph", graph_spec,
                   "cycle:<n> | zd:<d> | file:<path> | prod:<a>,<b>,...")
      ->required();
  zeta->add_option("--s", s_range, "s value or start:stop:step")->required();
  zeta->add_option("--mode", mode, "exact | closed | mellin | continuation")
      ->check(CLI::IsMember({"exact", "closed", "mellin", "continuation"}));
  zeta->add_option("--t-max", t_max, "mellin quadrature cutoff");
  zeta->add_option("--nodes", nodes, "mellin quadrature intervals");
  zeta->add_option("--M", strip_m, "continuation strip bound");
  zeta->add_option("--N", series_n, "continuation series truncation");
  add_common(zeta, &common);

  CLI::App* heat = app.add_subcommand("heat", "heat function H_t");
  heat->add_option("--graph", graph_spec, "graph spec")->required();
  heat->add_option("--t", t_range, "t value or start:stop:step")->required();
  add_common(heat, &common);

  CLI::App* charpoly =
      app.add_subcommand("charpoly", "coefficients of det(x + Laplacian)");
  charpoly->add_option("--graph", graph_spec, "finite graph spec")->required();
  add_common(charpoly, &common);

  CLI::App* forests =
      app.add_subcommand("forests", "rooted spanning forest counts of cycles");
  forests->add_option("--n", fn, "cycle length")->required();
  forests->add_option("--k", fk, "number of trees (default: all)");
  forests->add_flag("--brute", brute, "cross-check by exhaustive enumeration");
  add_common(forests, &common);

  CLI::App* regdet_cmd =
      app.add_subcommand("regdet", "regularized determinant det*(x + Laplacian)");
  regdet_cmd->add_option("--graph", graph_spec, "graph spec")->required();
  regdet_cmd->add_option("--x", x_range, "x value or start:stop:step");
  regdet_cmd->add_option("--series", series_order,
                         "emit the large-x expansion of this order instead");
  add_common(regdet_cmd, &common);

  CLI::App* ihara = app.add_subcommand("ihara", "ihara zeta of regular models");
  ihara->add_option("--graph", graph_spec, "graph spec")->required();
  ihara->add_option("--u", u_range, "u value or start:stop:step")->required();
  ihara->add_flag("--regularized", regularized,
                  "regularized variant (real u > 0)");
  add_common(ihara, &common);

  CLI::App* residue =
      app.add_subcommand("residue", "residues of the lattice zeta at k + d/2");
  residue->add_option("--d", rd, "lattice dimension")->required();
  residue->add_option("--k", rk, "max pole index k")->required();
  add_common(residue, &common);

  CLI::App* funceq = app.add_subcommand(
      "funceq", "exact functional identity for the 2d lattice at s = -k");
  funceq->add_option("--kmax", kmax, "check k = 0..kmax")->required();
  add_common(funceq, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (zeta->parsed())
      return run_zeta(graph_spec, s_range, mode, t_max, nodes, strip_m,
                      series_n, common);
    if (heat->parsed()) return run_heat(graph_spec, t_range, common);
    if (charpoly->parsed()) return run_charpoly(graph_spec, common);
    if (forests->parsed()) return run_forests(fn, fk, brute, common);
    if (regdet_cmd->parsed())
      return run_regdet(graph_spec, x_range, series_order, common);
    if (ihara->parsed())
      return run_ihara(graph_spec, u_range, regularized, common);
    if (residue->parsed()) return run_residue(rd, rk, common);
    if (funceq->parsed()) return run_funceq(kmax, common);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gzeta::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
