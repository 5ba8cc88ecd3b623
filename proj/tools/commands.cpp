#include "commands.hpp"

#include "cantorq/cantorq.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

namespace cantorq::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxEnumeratedSets = 100000;

const char* format_name(Format f) { return f == Format::json ? "json" : "csv"; }

json words_json(const std::vector<Word>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w.letters());
  return out;
}

std::string words_csv(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ';';
    out += w.letters();
  }
  return out;
}

std::string envelope(const std::string& command, json parameters, json results) {
  json record;
  record["command"] = command;
  record["parameters"] = std::move(parameters);
  record["results"] = std::move(results);
  return record.dump(2) + "\n";
}

// CSV output starts with one comment line naming the command and parameters.
std::string csv_preamble(const std::string& command, const json& parameters) {
  std::string line = "# " + command;
  for (const auto& [key, value] : parameters.items())
    line += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  return line + "\n";
}

CommandResult usage_error(const std::string& message) {
  return {kUsageError, "", "error: " + message + "\n"};
}

std::vector<std::vector<Word>> select_split_sets(std::uint32_t n, const std::string& selector) {
  if (selector == "canonical") return {canonical_split_set(n)};
  if (selector == "all") {
    if (count_optimal_sets(n) > kMaxEnumeratedSets)
      throw InvalidArgument("n=" + std::to_string(n) + " has " + to_string(count_optimal_sets(n)) +
                            " optimal sets; 'all' is limited to " +
                            std::to_string(kMaxEnumeratedSets));
    std::vector<std::vector<Word>> out;
    for_each_split_set(n, [&](const std::vector<Word>& s) { out.push_back(s); });
    return out;
  }
  std::vector<Word> words;
  if (selector != "none") {
    std::stringstream in(selector);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) throw InvalidArgument("empty word in split-set list '" + selector + "'");
      words.push_back(Word::parse(item));
    }
  }
  validate_split_set(n, words);
  return {words};
}

}  // namespace

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

CommandResult optimal_set(std::uint32_t n, const std::string& selector, Format format) {
  if (n == 0) return usage_error("--n must be >= 1");
  std::vector<std::vector<Word>> sets;
  try {
    sets = select_split_sets(n, selector);
  } catch (const Error& e) {
    return usage_error(e.what());
  }

  const json parameters = {{"n", n}, {"split_set", selector}, {"format", format_name(format)}};
  CommandResult result;
  if (format == Format::json) {
    json records = json::array();
    for (const auto& split : sets) {
      const PointSet alpha = build_alpha(n, split);
      const DistortionReport report = distortion_closed_form(n, split);
      json points = json::array();
      for (const auto& p : alpha.points())
        points.push_back({{"x", p.x().to_string()}, {"y", p.y().to_string()}});
      records.push_back({{"split_set", words_json(report.split_set)},
                         {"points", std::move(points)},
                         {"report",
                          {{"n", report.n},
                           {"total", report.total.to_string()},
                           {"variance_term", report.variance_term.to_string()},
                           {"a_term", report.a_term.to_string()}}}});
    }
    json results = {{"count_optimal_sets", to_string(count_optimal_sets(n))},
                    {"sets", std::move(records)}};
    result.out = envelope("optimal-set", parameters, std::move(results));
    return result;
  }

  std::ostringstream csv;
  csv << csv_preamble("optimal-set", parameters);
  csv << "set,split_set,point,x,y,total,variance_term,a_term\n";
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const PointSet alpha = build_alpha(n, sets[s]);
    const DistortionReport report = distortion_closed_form(n, sets[s]);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const auto& p = alpha.points()[i];
      csv << s << ',' << words_csv(report.split_set) << ',' << i << ',' << p.x() << ',' << p.y()
          << ',' << report.total << ',' << report.variance_term << ',' << report.a_term << '\n';
    }
  }
  result.out = csv.str();
  return result;
}

CommandResult error_table(std::uint32_t max_n, Format format) {
  if (max_n == 0) return usage_error("--max-n must be >= 1");
  const json parameters = {{"max_n", max_n}, {"format", format_name(format)}};

  struct Row {
    std::uint32_t n;
    Rational v_n;
    Rational excess;
  };
  std::vector<Row> rows;
  rows.reserve(max_n);
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    Rational v = distortion_closed_form(n, canonical_split_set(n)).total;
    Rational excess = v - v_infinity();
    rows.push_back({n, std::move(v), std::move(excess)});
  }

  CommandResult result;
  if (format == Format::json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n},
                     {"v_n", r.v_n.to_string()},
                     {"v_n_float", format_float(r.v_n.to_double())},
                     {"excess", r.excess.to_string()}});
    result.out = envelope("error-table", parameters,
                          {{"v_infinity", v_infinity().to_string()}, {"rows", std::move(out)}});
    return result;
  }
  std::ostringstream csv;
  csv << csv_preamble("error-table", parameters) << "n,v_n,v_n_float,excess\n";
  for (const auto& r : rows)
    csv << r.n << ',' << r.v_n << ',' << format_float(r.v_n.to_double()) << ',' << r.excess << '\n';
  result.out = csv.str();
  return result;
}

CommandResult verify(std::uint32_t max_n, int level, int max_refine_depth, Format format) {
  if (max_n == 0) return usage_error("--max-n must be >= 1");
  if (level < 0 || level > kDefaultLevelLimit)
    return usage_error("--level must be in 0.." + std::to_string(kDefaultLevelLimit));
  if (max_refine_depth < 1) return usage_error("--max-refine-depth must be >= 1");
  if (max_n > (std::uint64_t{1} << level))
    return usage_error("--max-n " + std::to_string(max_n) + " exceeds 2^level = " +
                       std::to_string(std::uint64_t{1} << level));

  const json parameters = {{"max_n", max_n},
                           {"level", level},
                           {"max_refine_depth", max_refine_depth},
                           {"format", format_name(format)}};

  struct Row {
    std::uint32_t n;
    Rational closed_form;
    Rational dp_value;
    bool dp_match;
    bool evaluator_match;
    bool lloyd_fixed;
    bool pass() const { return dp_match && evaluator_match && lloyd_fixed; }
  };
  std::vector<Row> rows;
  CommandResult result;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    try {
      const auto split = canonical_split_set(n);
      const PointSet alpha = build_alpha(n, split);
      const Rational closed = distortion_closed_form(n, split).total;
      const DpResult dp = dp_optimal(n, level);
      const bool dp_match = dp.value == closed && dp.points.abscissas() == alpha.abscissas();
      const bool evaluator_match = exact_distortion(alpha, max_refine_depth) == closed;
      const bool lloyd_fixed = lloyd_step(alpha, max_refine_depth).points() == alpha.points();
      rows.push_back({n, closed, dp.value, dp_match, evaluator_match, lloyd_fixed});
    } catch (const Error& e) {
      result.exit_code = kVerificationFailed;
      result.err += "error: verify n=" + std::to_string(n) + ": " + e.what() + "\n";
      return result;
    }
  }

  bool all_pass = true;
  for (const auto& r : rows) all_pass = all_pass && r.pass();
  result.exit_code = all_pass ? kSuccess : kVerificationFailed;

  if (format == Format::json) {
    json out = json::array();
    for (const auto& r : rows)
      out.push_back({{"n", r.n},
                     {"closed_form", r.closed_form.to_string()},
                     {"dp_value", r.dp_value.to_string()},
                     {"dp_match", r.dp_match},
                     {"exact_evaluator_match", r.evaluator_match},
                     {"lloyd_fixed_point", r.lloyd_fixed},
                     {"pass", r.pass()}});
    result.out =
        envelope("verify", parameters, {{"all_pass", all_pass}, {"rows", std::move(out)}});
    return result;
  }
  std::ostringstream csv;
  csv << csv_preamble("verify", parameters)
      << "n,closed_form,dp_value,dp_match,exact_evaluator_match,lloyd_fixed_point,pass\n";
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : rows)
    csv << r.n << ',' << r.closed_form << ',' << r.dp_value << ',' << flag(r.dp_match) << ','
        << flag(r.evaluator_match) << ',' << flag(r.lloyd_fixed) << ',' << flag(r.pass()) << '\n';
  result.out = csv.str();
  return result;
}

CommandResult asymptotics(const std::string& kind, int max_level, bool plot_data, Format format) {
  if (kind != "dimension" && kind != "coefficient")
    return usage_error("--kind must be 'dimension' or 'coefficient'");
  if (max_level < 1 || max_level > 62) return usage_error("--max-level must be in 1..62");

  const bool dimension = kind == "dimension";
  const auto samples = dimension ? dimension_sequence(max_level) : coefficient_sequence(max_level);
  const json parameters = {{"kind", kind},
                           {"max_level", max_level},
                           {"plot_data", plot_data},
                           {"format", format_name(format)}};
  const auto estimate = [&](const AsymptoticSample& s) -> std::optional<std::string> {
    if (dimension) {
      if (!s.dim_estimate) return std::nullopt;
      return format_float(*s.dim_estimate);
    }
    return format_float(s.coeff_estimate);
  };
  const std::string column = dimension ? "dim_estimate" : "coeff_estimate";

  CommandResult result;
  if (format == Format::json) {
    json results;
    if (plot_data) {
      json rows = json::array();
      for (const auto& s : samples) {
        const auto e = estimate(s);
        rows.push_back(json::array({s.n, e ? json(*e) : json(nullptr)}));
      }
      results = {{"columns", {"n", column}}, {"rows", std::move(rows)}};
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        rows.push_back({{"level", i + 1},
                        {"n", s.n},
                        {"v_n", s.v_n.to_string()},
                        {"excess", s.excess.to_string()},
                        {"dim_estimate", s.dim_estimate ? json(format_float(*s.dim_estimate))
                                                        : json(nullptr)},
                        {"coeff_exact", s.coeff_exact.to_string()},
                        {"coeff_estimate", format_float(s.coeff_estimate)}});
      }
      results = {{"v_infinity", v_infinity().to_string()}, {"samples", std::move(rows)}};
    }
    result.out = envelope("asymptotics", parameters, std::move(results));
    return result;
  }

  std::ostringstream csv;
  csv << csv_preamble("asymptotics", parameters);
  if (plot_data) {
    csv << "n," << column << '\n';
    for (const auto& s : samples) csv << s.n << ',' << estimate(s).value_or("") << '\n';
  } else {
    csv << "level,n,v_n,excess,dim_estimate,coeff_exact,coeff_estimate\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      csv << i + 1 << ',' << s.n << ',' << s.v_n << ',' << s.excess << ','
          << (s.dim_estimate ? format_float(*s.dim_estimate) : "") << ',' << s.coeff_exact << ','
          << format_float(s.coeff_estimate) << '\n';
    }
  }
  result.out = csv.str();
  return result;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constrained quantization of the Cantor distribution on the lines "
               "y = x + 1/j"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}};
  Format format = Format::json;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::uint32_t n = 1;
  std::string selector = "canonical";
  auto* opt = app.add_subcommand("optimal-set", "Constrained optimal set(s) alpha_n(I) and their errors");
  opt->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  opt->add_option("--split-set", selector,
                  "canonical | all | comma-separated words of length floor(log2 n)");
  add_format(opt);

  std::uint32_t max_n = 1;
  auto* table = app.add_subcommand("error-table", "Exact V_n for n = 1..max-n");
  table->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  add_format(table);

  int level = 10;
  int max_depth = kDefaultMaxRefineDepth;
  auto* ver = app.add_subcommand("verify", "Check closed forms against the DP and Lloyd oracles");
  ver->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  ver->add_option("--level", level, "Basic-interval level of the DP lattice")->required();
  ver->add_option("--max-refine-depth", max_depth, "Refinement depth limit of the evaluator")
      ->capture_default_str();
  add_format(ver);

  std::string kind;
  int max_level = 1;
  bool plot_data = false;
  auto* asy = app.add_subcommand("asymptotics", "Dimension / coefficient sequences at n = 2^l");
  asy->add_option("--kind", kind, "dimension | coefficient")
      ->required()
      ->check(CLI::IsMember({"dimension", "coefficient"}));
  asy->add_option("--max-level", max_level, "Largest l")->required();
  asy->add_flag("--plot-data", plot_data, "Emit two-column (n, estimate) data only");
  add_format(asy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  CommandResult result;
  if (*opt) result = optimal_set(n, selector, format);
  else if (*table) result = error_table(max_n, format);
  else if (*ver) result = verify(max_n, level, max_depth, format);
  else result = asymptotics(kind, max_level, plot_data, format);
  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace cantorq::cli
