// Command-line front end: ring definitions in, JSON reports out.

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "toricmcm/report.hpp"

using namespace toricmcm;

namespace {

struct CommonArgs {
  std::string preset_name;
  std::string file;
  std::string out;
  std::string sweep;
  long long p = 0;
  int k = 0;
  long long q = 0;
  long long trunc = 0;
  long long bound = 0;
  long long multiple_bound = 30;
  long long len_m = 0, len_n = 0, rank = 0, fracdeg = 0;
  bool timing = false;
  bool allow_any_scalar = false;
  std::vector<std::string> vars, ideal_a, ideal_b;
};

RingDefinitionFile load_definition(const CommonArgs& args) {
  if (!args.preset_name.empty()) return preset(args.preset_name);
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw ValidationError("cannot open '" + args.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring(ss.str());
  }
  throw ValidationError("provide --preset or --file");
}

void emit(const std::string& out, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    f << text;
  }
}

bool opt_given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* o = sub->get_option_no_throw(name);
  return o && o->count() > 0;
}

DispatchFlags to_flags(const CommonArgs& args, const CLI::App* sub) {
  DispatchFlags f;
  if (opt_given(sub, "--q")) f.q = args.q;
  if (args.p >= 2) f.p = args.p;
  if (args.k >= 1) f.k = args.k;
  if (opt_given(sub, "--trunc")) f.trunc = args.trunc;
  f.allow_any_scalar = args.allow_any_scalar;
  f.timing = args.timing;
  f.bound = args.bound;
  f.multiple_bound = args.multiple_bound;
  f.vars = args.vars;
  f.ideal_a = args.ideal_a;
  f.ideal_b = args.ideal_b;
  if (opt_given(sub, "--len-m")) f.len_m = args.len_m;
  if (opt_given(sub, "--len-n")) f.len_n = args.len_n;
  if (opt_given(sub, "--rank")) f.rank = args.rank;
  if (opt_given(sub, "--fracdeg")) f.fracdeg = args.fracdeg;
  return f;
}

// "7:7,11:121" -> per-entry (p, q) overrides, fanned out over a worker pool;
// output order follows the input key order deterministically
int run_sweep(const std::string& command, const RingDefinitionFile& def,
              const CommonArgs& args, const DispatchFlags& base) {
  struct Job {
    long long p, q;
    Json report;
    int code = 0;
  };
  std::vector<Job> jobs;
  std::stringstream ss(args.sweep);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ValidationError("sweep entries look like p:q");
    jobs.push_back({std::stoll(item.substr(0, colon)),
                    std::stoll(item.substr(colon + 1)), Json{}, 0});
  }
  std::vector<std::thread> pool;
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&]() {
    while (true) {
      std::size_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= jobs.size()) return;
        mine = next++;
      }
      DispatchFlags f = base;
      f.p = jobs[mine].p;
      f.q = jobs[mine].q;
      try {
        auto res = dispatch(command, def, f);
        jobs[mine].report = res.report;
        jobs[mine].code = res.exit_code;
      } catch (const EngineError& e) {
        jobs[mine].report = error_report(command, e.code(), e.what());
        jobs[mine].code = 1;
      }
    }
  };
  unsigned nthreads =
      std::min<unsigned>(std::thread::hardware_concurrency()
                             ? std::thread::hardware_concurrency()
                             : 1,
                         static_cast<unsigned>(jobs.size()));
  for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  Json arr = Json::array();
  int code = 0;
  for (const auto& jb : jobs) {
    Json e;
    e["p"] = jb.p;
    e["q"] = jb.q;
    e["report"] = jb.report;
    arr.push_back(e);
    code = std::max(code, jb.code);
  }
  emit(args.out, arr);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for local toric rings: Frobenius pushforward "
               "saturation modules, semigroup closures, Witt checks and "
               "naive intersection numbers"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  for (const char* name :
       {"basis", "saturate", "certify", "verify-family", "annihilate",
        "fintegral", "normalize", "powint", "witt-check", "chi", "pardeg"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--preset", args.preset_name, "built-in definition");
    sub->add_option("--file", args.file, "ring definition file");
    sub->add_option("--out", args.out, "write the report here");
    sub->add_option("--p", args.p, "override the characteristic");
    sub->add_option("--k", args.k, "scalar field extension degree");
    sub->add_flag("--timing", args.timing, "include wall time");
    std::string n = name;
    if (n == "saturate" || n == "certify" || n == "verify-family" ||
        n == "annihilate") {
      sub->add_option("--q", args.q, "Frobenius power");
      sub->add_option("--sweep", args.sweep, "comma list of p:q pairs");
    }
    if (n == "witt-check") {
      sub->add_option("--trunc", args.trunc, "truncation order");
      sub->add_flag("--allow-any-scalar", args.allow_any_scalar,
                    "evaluate non-unit coefficients through the integer image");
    }
    if (n == "fintegral" || n == "normalize" || n == "powint") {
      sub->add_option("--bound", args.bound, "enumeration bound");
      sub->add_option("--multiple-bound", args.multiple_bound,
                      "exponents tested for power-integrality");
    }
    if (n == "chi") {
      sub->add_option("--vars", args.vars, "ambient variable names");
      sub->add_option("--ideal-a", args.ideal_a,
                      "relations of the first ideal");
      sub->add_option("--ideal-b", args.ideal_b,
                      "relations of the second ideal");
      sub->add_option("--len-m", args.len_m, "length of M at its prime");
      sub->add_option("--len-n", args.len_n, "length of N at its prime");
      sub->add_option("--rank", args.rank, "rank of the free MCM");
      sub->add_option("--fracdeg", args.fracdeg, "fraction-field degree");
    }
    subs.push_back({n, sub});
  }

  CLI11_PARSE(app, argc, argv);

  std::string command;
  const CLI::App* chosen = nullptr;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) {
      command = n;
      chosen = sub;
    }

  try {
    DispatchFlags flags = to_flags(args, chosen);
    RingDefinitionFile def;
    if (command == "chi" && args.preset_name.empty() && args.file.empty()) {
      def.p = flags.p.value_or(101);
    } else {
      def = load_definition(args);
    }
    if (!args.sweep.empty()) return run_sweep(command, def, args, flags);
    auto res = dispatch(command, def, flags);
    emit(args.out, res.report);
    return res.exit_code;
  } catch (const EngineError& e) {
    emit(args.out, error_report(command, e.code(), e.what()));
    return 1;
  } catch (const std::exception& e) {
    emit(args.out, error_report(command, "internal_error", e.what()));
    return 1;
  }
}
