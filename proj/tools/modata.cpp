#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "modata/catalog.hpp"
#include "modata/classify.hpp"
#include "modata/io.hpp"
#include "modata/screen.hpp"
#include "modata/tables.hpp"

namespace fs = std::filesystem;
using namespace modata;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kField = 3 };

bool structured = false;

// One record of a flat key/value document; records are separated by a blank line.
class Record {
 public:
  explicit Record(const std::string& kind) { add("record", kind); }
  Record& add(const std::string& key, const std::string& value) {
    fields_.emplace_back(key, value);
    return *this;
  }
  void print(std::ostream& os) const {
    for (const auto& [k, v] : fields_) os << k << ": " << v << "\n";
    os << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

void print_report(const VerificationReport& rep) {
  for (const auto& c : rep.checks) {
    if (structured) {
      Record r("check");
      r.add("name", c.name).add("status", status_name(c.status));
      if (!c.indices.empty()) r.add("indices", c.index_string());
      if (!c.value.empty()) r.add("value", c.value);
      r.print(std::cout);
      continue;
    }
    std::cout << status_name(c.status) << "  " << c.name;
    if (!c.indices.empty()) std::cout << " (" << c.index_string() << ")";
    if (!c.value.empty()) std::cout << "  " << c.value;
    std::cout << "\n";
  }
  if (structured) Record("summary").add("result", rep.passed() ? "pass" : "fail").print(std::cout);
  else std::cout << "result: " << rep.summary() << "\n";
}

int report_error(const Error& e, int code) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

int cmd_verify(const std::string& path, const std::string& as) {
  ExactMatrix m;
  try {
    m = parse_table(read_file(path));
  } catch (const ParseError& e) {
    return report_error(e, kParse);
  }
  std::string mode = as.empty() ? role_name(m.role()) : as;
  VerificationReport rep;
  try {
    if (mode == "fourier") rep = verify_fourier(m.with_role(Role::Fourier));
    else if (mode == "allen") rep = verify_allen(m.with_role(Role::Allen));
    else if (mode == "integral-fourier") rep = verify_integral_fourier(m.with_role(Role::Allen));
    else rep = verify_eigen_suite(m.with_role(Role::Eigen));
  } catch (const SqrtNotInField& e) {
    return report_error(e, kField);
  }
  print_report(rep);
  return rep.passed() ? kPass : kFail;
}

ExactMatrix convert_step(const ExactMatrix& m, Role to) {
  if (m.role() == to) return m;
  switch (to) {
    case Role::Allen:
      return m.role() == Role::Fourier ? allen_from_fourier(m) : allen_from_eigen(m);
    case Role::Eigen:
      return eigen_from_allen(m.role() == Role::Allen ? m : allen_from_fourier(m));
    case Role::Fourier:
      return fourier_from_allen(m.role() == Role::Allen ? m : allen_from_eigen(m));
  }
  return m;
}

int cmd_convert(const std::string& path, const std::string& from, const std::vector<std::string>& to) {
  ExactMatrix m;
  try {
    m = parse_table(read_file(path));
    if (!from.empty()) m = m.with_role(*parse_role(from));
  } catch (const ParseError& e) {
    return report_error(e, kParse);
  }
  try {
    for (const auto& t : to) m = convert_step(m, *parse_role(t));
  } catch (const SqrtNotInField& e) {
    return report_error(e, kField);
  } catch (const Error& e) {
    return report_error(e, kFail);
  }
  std::cout << format_table(m);
  return kPass;
}

struct ScreenLine {
  std::string file;
  bool parse_error = false;
  std::string text;
  bool rejected = false;
};

ScreenLine screen_file(const fs::path& p, const Hypotheses& flags) {
  ScreenLine line;
  line.file = p.string();
  TableInput in;
  try {
    in = parse_input(read_file(p.string()));
  } catch (const ParseError& e) {
    line.parse_error = true;
    line.text = e.what();
    return line;
  }
  Hypotheses h = flags;
  std::vector<Verdict> verdicts;
  if (auto* m = std::get_if<ExactMatrix>(&in)) {
    Hypotheses inferred = infer_hypotheses(m->with_role(Role::Eigen));
    h.real |= inferred.real;
    h.nonneg_lambda |= inferred.nonneg_lambda;
    h.entry_bound |= inferred.entry_bound;
    h.integral_fourier |= inferred.integral_fourier;
    verdicts = screen_all(m->with_role(Role::Eigen), h);
  } else {
    verdicts = screen_all(std::get<DegreeVector>(in), h);
  }
  std::string rules, witness;
  for (const auto& v : verdicts)
    if (v.outcome == Outcome::Rejected) {
      rules += (rules.empty() ? "" : ",") + v.rule;
      if (witness.empty()) witness = v.witness;
    }
  line.rejected = !rules.empty();
  line.text = line.rejected ? rules + " (" + witness + ")" : "";
  return line;
}

int cmd_screen(const std::string& path, const Hypotheses& flags) {
  std::vector<fs::path> files;
  bool single = !fs::is_directory(path);
  if (single) {
    files.push_back(path);
  } else {
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
  }
  int parse_errors = 0, rejected = 0;
  for (const auto& f : files) {
    ScreenLine l = screen_file(f, flags);
    parse_errors += l.parse_error;
    rejected += l.rejected;
    std::string verdict = l.parse_error ? "parse-error" : l.rejected ? "rejected" : "admissible";
    if (structured) {
      Record r("verdict");
      r.add("file", l.file).add("verdict", verdict);
      if (l.parse_error) r.add("error", l.text);
      else if (l.rejected) r.add("rules", l.text);
      r.print(std::cout);
    } else {
      std::cout << l.file << ": " << verdict << (l.text.empty() ? "" : " " + l.text) << "\n";
    }
  }
  if (single && parse_errors) return kParse;
  return parse_errors || rejected ? kFail : kPass;
}

long default_bound(long fallback) {
  if (const char* env = std::getenv("MODATA_MAX_DEGREE")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring MODATA_MAX_DEGREE=" << env << "\n";
    }
  }
  return fallback;
}

struct ClassifyArgs {
  std::string mode;
  int rank = 0;
  long max_degree = 0;
  std::string out;
  bool explain = false;
  unsigned workers = 1;
};

ClassificationResult run_mode(const ClassifyArgs& a) {
  auto need_rank = [&](int r) {
    if (a.rank != 0 && a.rank != r)
      throw UnsupportedMode("mode " + a.mode + " is rank " + std::to_string(r));
  };
  if (a.mode == "rank2") {
    need_rank(2);
    return classify_rank2(a.max_degree ? a.max_degree : default_bound(1000));
  }
  if (a.mode == "rank3-sym") {
    need_rank(3);
    return classify_rank3_symmetric(a.max_degree ? a.max_degree : default_bound(60));
  }
  if (a.mode == "rank3-asym") {
    need_rank(3);
    return classify_rank3_asymmetric(a.max_degree ? a.max_degree : default_bound(1000));
  }
  if (a.mode == "rank4-linear" || a.mode == "rank5-linear") {
    need_rank(a.mode == "rank4-linear" ? 4 : 5);
    SearchOptions opt{a.max_degree ? a.max_degree : default_bound(60), a.workers};
    return a.mode == "rank4-linear" ? classify_rank4_linear(opt) : classify_rank5_linear(opt);
  }
  if (a.mode == "integral") {
    if (a.rank < 2 || a.rank > 5) throw UnsupportedMode("integral mode needs --rank 2..5");
    return integral_nonexistence(a.rank, a.max_degree ? a.max_degree : default_bound(10000));
  }
  throw UnsupportedMode("unknown mode " + a.mode);
}

int cmd_classify(const ClassifyArgs& a) {
  ClassificationResult res;
  try {
    res = run_mode(a);
  } catch (const UnsupportedMode& e) {
    return report_error(e, kParse);
  }
  std::vector<std::string> files;
  if (!a.out.empty()) {
    fs::create_directories(a.out);
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
      fs::path p = fs::path(a.out) / ("survivor-" + std::to_string(i + 1) + ".txt");
      std::ofstream(p) << format_table(res.survivors[i].table);
      files.push_back(p.string());
    }
  }
  std::string bound = res.search_bound ? std::to_string(*res.search_bound) : "exhaustive";
  if (structured) {
    Record("summary")
        .add("mode", a.mode)
        .add("rank", std::to_string(res.rank))
        .add("hypotheses", res.hypotheses.to_string())
        .add("search_bound", bound)
        .add("survivors", std::to_string(res.survivors.size()))
        .add("rejected", std::to_string(res.rejected.size()))
        .add("unresolved", std::to_string(res.unresolved.size()))
        .print(std::cout);
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
      const Survivor& s = res.survivors[i];
      Record r("survivor");
      r.add("index", std::to_string(i + 1)).add("degrees", s.degrees.to_string()).add("tag", s.tag);
      r.add("table", detail::one_line(s.table));
      if (!files.empty()) r.add("file", files[i]);
      r.print(std::cout);
    }
    for (const auto& [k, v] : res.facts) Record("fact").add("key", k).add("value", v).print(std::cout);
    for (const auto& u : res.unresolved) Record("unresolved").add("detail", u).print(std::cout);
    if (a.explain)
      for (const auto& x : res.rejected)
        Record("rejection").add("candidate", x.candidate).add("reason", x.reason).print(std::cout);
  } else {
    std::cout << "mode " << a.mode << ", rank " << res.rank << ", bound " << bound << ", hypotheses "
              << res.hypotheses.to_string() << "\n";
    std::cout << "survivors: " << res.survivors.size() << "  rejected: " << res.rejected.size()
              << "  unresolved: " << res.unresolved.size() << "\n";
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
      const Survivor& s = res.survivors[i];
      std::cout << "  [" << i + 1 << "] " << s.degrees.to_string() << "  " << s.tag << "\n";
      std::cout << "      " << detail::one_line(s.table) << "\n";
      if (!files.empty()) std::cout << "      -> " << files[i] << "\n";
    }
    for (const auto& [k, v] : res.facts) std::cout << k << ": " << v << "\n";
    for (const auto& u : res.unresolved) std::cout << "unresolved: " << u << "\n";
    if (a.explain)
      for (const auto& x : res.rejected) std::cout << "rejected " << x.candidate << "\n    " << x.reason << "\n";
  }
  return res.unresolved.empty() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification and classification of Fourier, Allen and eigenmatrix tables"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  const std::vector<std::string> roles = {"fourier", "allen", "eigen"};

  std::string path, as, from;
  std::vector<std::string> to;
  auto* verify = app.add_subcommand("verify", "Verify a table file");
  verify->add_option("file", path, "Table file")->required();
  verify->add_option("--as", as, "Verifier")->check(
      CLI::IsMember({"fourier", "allen", "integral-fourier", "eigen"}));

  auto* convert = app.add_subcommand("convert", "Convert between table forms");
  convert->add_option("file", path, "Table file")->required();
  convert->add_option("--from", from, "Source form (defaults to the file role)")->check(CLI::IsMember(roles));
  convert->add_option("--to", to, "Target form; repeat to chain")->required()->check(CLI::IsMember(roles));

  Hypotheses flags;
  auto* screen = app.add_subcommand("screen", "Screen a table or degree file, or every file in a directory");
  screen->add_option("path", path, "File or directory")->required();
  screen->add_flag("--real", flags.real, "Assume a real table");
  screen->add_flag("--nonneg-lambda", flags.nonneg_lambda, "Assume lambda_ii*j >= 0");
  screen->add_flag("--entry-bound", flags.entry_bound, "Assume |s_ij| <= s_0j");
  screen->add_flag("--integral-fourier", flags.integral_fourier, "Assume an integral Fourier matrix");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Run a classification search");
  classify->add_option("--mode", ca.mode, "rank2, rank3-sym, rank3-asym, rank4-linear, rank5-linear, integral")
      ->required();
  classify->add_option("--rank", ca.rank, "Rank (required for integral)");
  classify->add_option("--max-degree", ca.max_degree, "Search bound (default from MODATA_MAX_DEGREE)");
  classify->add_option("--out", ca.out, "Directory for survivor table files");
  classify->add_option("--workers", ca.workers, "Parallel workers for the linear searches");
  classify->add_flag("--explain", ca.explain, "List rejected candidates with witnesses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kParse;
  }
  structured = format == "structured";

  try {
    if (*verify) return cmd_verify(path, as);
    if (*convert) return cmd_convert(path, from, to);
    if (*screen) return cmd_screen(path, flags);
    if (*classify) return cmd_classify(ca);
  } catch (const Error& e) {
    return report_error(e, kFail);
  }
  return kParse;
}
