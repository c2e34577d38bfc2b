#include "optcode/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "optcode/assign.hpp"
#include "optcode/codebook.hpp"
#include "optcode/corpus.hpp"
#include "optcode/error.hpp"
#include "optcode/format.hpp"
#include "optcode/maxent.hpp"
#include "optcode/randtype.hpp"
#include "optcode/rng.hpp"

namespace optcode::cli {

namespace {

using nlohmann::ordered_json;

struct HelpRequested {
  std::string text;
};

const char* name_of(Subcommand s) {
  switch (s) {
    case Subcommand::codes:
      return "codes";
    case Subcommand::lengths:
      return "lengths";
    case Subcommand::simulate:
      return "simulate";
    case Subcommand::fit:
      return "fit";
    case Subcommand::analyze:
      return "analyze";
    case Subcommand::figure:
      return "figure";
    case Subcommand::oracle:
      return "oracle";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "tsv") return OutputFormat::tsv;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw UsageError("--format must be one of tsv, csv, json (got '" + s + "')");
}

void require_format(const CommandSpec& spec, std::initializer_list<OutputFormat> allowed,
                    const char* listing) {
  for (auto f : allowed) {
    if (f == spec.format) return;
  }
  throw UsageError(std::string(name_of(spec.subcommand)) + " supports --format " + listing);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--bias expects comma-separated numbers");
    out.push_back(v);
  }
  return out;
}

void check_domain(const CommandSpec& spec, bool has_sample_source) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
  };
  switch (spec.subcommand) {
    case Subcommand::codes:
      need(spec.ranks >= 1, "--ranks must be >= 1");
      codebook::Alphabet{spec.alphabet};
      break;
    case Subcommand::lengths:
      need(spec.n >= 1, "--N must be >= 1");
      need(spec.i_max >= 1, "--imax must be >= 1");
      break;
    case Subcommand::figure:
    case Subcommand::simulate:
      need(spec.n >= 1, "--N must be >= 1");
      need(spec.p_s > 0.0 && spec.p_s < 1.0, "--ps must lie in (0, 1)");
      need(spec.i_max >= 1, "--imax must be >= 1");
      if (spec.subcommand == Subcommand::simulate) {
        need(spec.n <= 26, "simulate emits letters a..z, so --N must be <= 26");
        need(spec.words >= 1, "--words must be >= 1");
        randtype::RandomTypingParams(spec.n, spec.p_s, spec.l_min,
                                     spec.letter_bias.empty()
                                         ? std::nullopt
                                         : std::optional<std::vector<double>>(spec.letter_bias));
      }
      break;
    case Subcommand::fit:
      if (spec.family != "all") maxent::family_from_string(spec.family);
      if (has_sample_source) {
        need(spec.samples >= 1, "--samples must be >= 1");
        switch (maxent::family_from_string(spec.family == "all" ? "zeta" : spec.family)) {
          case maxent::Family::zeta:
            maxent::ZetaParams{spec.alpha};
            break;
          case maxent::Family::zipf_mandelbrot:
            maxent::ZipfMandelbrotParams(spec.alpha, spec.b);
            break;
          case maxent::Family::geometric:
            maxent::GeometricParams{spec.q};
            break;
        }
      }
      break;
    case Subcommand::analyze:
      codebook::Alphabet{spec.alphabet};
      break;
    case Subcommand::oracle:
      need(spec.instances >= 1, "--instances must be >= 1");
      need(spec.max_ranks >= 1 && spec.max_ranks <= assign::kBruteForceMaxRanks,
           "--max-ranks must lie in [1, 8]");
      need(spec.max_magnitudes >= spec.max_ranks &&
               spec.max_magnitudes <= assign::kBruteForceMaxMagnitudes,
           "--max-magnitudes must lie in [max-ranks, 10]");
      break;
  }
}

// Outputs are staged in memory and only reach the filesystem once the whole
// command has succeeded.
class Artifacts {
 public:
  void stage(std::string path, std::string content) { files_.emplace_back(std::move(path), std::move(content)); }

  void commit() {
    for (const auto& [path, content] : files_) {
      const std::string tmp = path + ".tmp";
      {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw IoError("cannot open '" + path + "' for writing");
        f << content;
        if (!f.flush()) throw IoError("failed writing '" + path + "'");
      }
      std::error_code ec;
      std::filesystem::rename(tmp, path, ec);
      if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at '" + path + "'");
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::string content{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  if (f.bad()) throw IoError("failed reading '" + path + "'");
  return content;
}

void emit_codes(const CommandSpec& spec, std::ostream& out) {
  const codebook::Alphabet alphabet(spec.alphabet);
  const auto table = codebook::optimal_nonsingular_code(spec.ranks, alphabet, spec.l_min);
  if (spec.format == OutputFormat::json) {
    auto j = format::to_json(table);
    j["l_min"] = spec.l_min;
    out << j.dump(2) << '\n';
  } else {
    codebook::write_tsv(out, table);
  }
}

void emit_lengths(const CommandSpec& spec, std::ostream& out) {
  if (spec.format == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (std::uint64_t i = 1; i <= spec.i_max; ++i) {
      rows.push_back({{"i", i}, {"l_i", codebook::code_length_for_rank(spec.n, spec.l_min, i)}});
    }
    out << ordered_json{{"N", spec.n}, {"l_min", spec.l_min}, {"lengths", rows}}.dump(2) << '\n';
    return;
  }
  const char sep = spec.format == OutputFormat::csv ? ',' : '\t';
  out << "i" << sep << "l_i\n";
  for (std::uint64_t i = 1; i <= spec.i_max; ++i) {
    out << i << sep << codebook::code_length_for_rank(spec.n, spec.l_min, i) << '\n';
  }
}

void emit_figure(const CommandSpec& spec, std::ostream& out) {
  const randtype::RandomTypingParams params(spec.n, spec.p_s, spec.l_min);
  const auto series = randtype::figure2_data(params, spec.i_max);
  if (spec.format == OutputFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& pt : series) rows.push_back({{"i", pt.i}, {"p_i", pt.p}});
    out << ordered_json{{"N", spec.n}, {"p_s", spec.p_s}, {"l_min", spec.l_min}, {"series", rows}}.dump(2)
        << '\n';
    return;
  }
  const char sep = spec.format == OutputFormat::tsv ? '\t' : ',';
  out << "i" << sep << "p_i\n";
  for (const auto& pt : series) out << pt.i << sep << format::shortest(pt.p) << '\n';
}

void emit_simulation(const CommandSpec& spec, std::ostream& out, Artifacts& artifacts) {
  std::optional<std::vector<double>> bias;
  if (!spec.letter_bias.empty()) bias = spec.letter_bias;
  const randtype::RandomTypingParams params(spec.n, spec.p_s, spec.l_min, bias);
  const auto words = randtype::generate(params, spec.seed, spec.words);

  if (spec.corpus_out) {
    std::string text;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k > 0) text.push_back(' ');
      text += words[k];
    }
    text.push_back('\n');
    artifacts.stage(*spec.corpus_out, std::move(text));
  }

  std::vector<std::string> nonempty;
  nonempty.reserve(words.size());
  for (const auto& w : words) {
    if (!w.empty()) nonempty.push_back(w);
  }
  const std::uint64_t empty_words = words.size() - nonempty.size();

  ordered_json j = {{"schema", format::kSimulationSchema},
                    {"params",
                     {{"N", spec.n},
                      {"p_s", spec.p_s},
                      {"l_min", spec.l_min},
                      {"letter_bias", bias ? ordered_json(*bias) : ordered_json(nullptr)},
                      {"seed", spec.seed},
                      {"words", spec.words}}},
                    {"empty_words", empty_words}};

  if (nonempty.empty()) {
    j["analysis"] = nullptr;
  } else {
    const auto table = corpus::table_from_tokens(nonempty);
    if (table.size() >= 2) {
      corpus::AnalysisOptions options;
      options.alphabet = randtype::typing_alphabet(params);
      options.l_min = spec.l_min == 0 ? 1 : spec.l_min;
      j["analysis"] = format::to_json(corpus::analyze(table, options));
    } else {
      j["analysis"] = nullptr;
    }
  }

  if (!bias) {
    const auto law = abbreviation_law(params);
    j["abbreviation_law"] = {{"a", law.a}, {"b", law.b_const}};
    try {
      const auto gof = randtype::rank_goodness_of_fit(params, words);
      j["goodness_of_fit"] = {{"statistic", gof.statistic},
                              {"bins", gof.bins},
                              {"degrees_of_freedom", gof.degrees_of_freedom},
                              {"p_value", gof.p_value}};
    } catch (const DomainError&) {
      j["goodness_of_fit"] = nullptr;
    }
    j["optimality"] = format::to_json(randtype::verify_optimality(params, spec.i_max));
  }
  out << j.dump(2) << '\n';
}

maxent::RankCounts fit_data(const CommandSpec& spec, ordered_json& source) {
  if (spec.input) {
    corpus::BuildOptions options;
    options.tokenizer.fold_case = spec.fold_case;
    options.tokenizer.strip_punctuation = spec.strip_punctuation;
    const auto table = corpus::build_table(read_file(*spec.input), options);
    std::vector<std::uint64_t> freqs;
    for (const auto& e : table.entries()) freqs.push_back(e.frequency);
    source = {{"input", *spec.input}, {"types", table.size()}};
    return maxent::RankCounts::from_frequencies(freqs);
  }
  const auto family = maxent::family_from_string(spec.family);
  std::shared_ptr<const maxent::RankLaw> law;
  ordered_json params;
  switch (family) {
    case maxent::Family::zeta:
      law = std::make_shared<maxent::ZetaLaw>(maxent::ZetaParams{spec.alpha});
      params = {{"alpha", spec.alpha}};
      break;
    case maxent::Family::zipf_mandelbrot:
      law = std::make_shared<maxent::ZipfMandelbrotLaw>(maxent::ZipfMandelbrotParams{spec.alpha, spec.b});
      params = {{"alpha", spec.alpha}, {"b", spec.b}};
      break;
    case maxent::Family::geometric:
      law = std::make_shared<maxent::GeometricLaw>(maxent::GeometricParams{spec.q});
      params = {{"q", spec.q}};
      break;
  }
  const maxent::RankSampler sampler(law);
  const auto draws = sampler.sample(spec.seed, spec.samples);
  source = {{"sample", maxent::to_string(family)}, {"params", params}, {"seed", spec.seed}};
  return maxent::RankCounts::from_samples(draws);
}

void emit_fit(const CommandSpec& spec, std::ostream& out) {
  ordered_json source;
  const auto data = fit_data(spec, source);
  if (spec.family == "all") {
    std::vector<maxent::FitResult> fits;
    for (auto f : {maxent::Family::zeta, maxent::Family::zipf_mandelbrot, maxent::Family::geometric}) {
      fits.push_back(maxent::fit_mle(data, f));
    }
    std::stable_sort(fits.begin(), fits.end(),
                     [](const auto& a, const auto& b) { return a.log_likelihood > b.log_likelihood; });
    ordered_json arr = ordered_json::array();
    for (const auto& f : fits) arr.push_back(format::to_json(f));
    out << ordered_json{{"schema", format::kFitSchema}, {"source", source}, {"fits", arr}}.dump(2) << '\n';
    return;
  }
  auto j = format::to_json(maxent::fit_mle(data, maxent::family_from_string(spec.family)));
  j["source"] = source;
  out << j.dump(2) << '\n';
}

void emit_analysis(const CommandSpec& spec, std::ostream& out, Artifacts& artifacts) {
  corpus::BuildOptions options;
  options.tokenizer.fold_case = spec.fold_case;
  options.tokenizer.strip_punctuation = spec.strip_punctuation;
  options.unit = spec.graphemes ? text::LengthUnit::graphemes : text::LengthUnit::code_points;
  auto table = corpus::build_table(read_file(*spec.input), options);
  if (spec.magnitudes) {
    std::istringstream sidecar(read_file(*spec.magnitudes));
    table = corpus::with_magnitudes(table, corpus::read_magnitudes(sidecar));
  }
  if (spec.table_out) {
    std::ostringstream tsv;
    corpus::write_tsv(tsv, table);
    artifacts.stage(*spec.table_out, tsv.str());
  }
  if (spec.format == OutputFormat::tsv) {
    corpus::write_tsv(out, table);
    return;
  }
  corpus::AnalysisOptions analysis;
  analysis.alphabet = codebook::Alphabet(spec.alphabet);
  analysis.l_min = spec.l_min;
  auto j = format::to_json(corpus::analyze(table, analysis));
  j["spectrum"] = ordered_json::array();
  for (const auto& [f, nf] : corpus::frequency_spectrum(table)) j["spectrum"].push_back({{"f", f}, {"n_f", nf}});
  out << j.dump(2) << '\n';
}

int emit_oracle(const CommandSpec& spec, std::ostream& out) {
  struct Row {
    std::uint64_t instance;
    std::size_t v, l;
    std::string cost;
    double optimal, brute;
    bool pass;
  };
  std::vector<Row> rows;
  const auto costs = {assign::CostFunction::identity(), assign::CostFunction::power(2.0),
                      assign::CostFunction::exponential(std::exp(1.0))};
  const char* cost_names[] = {"identity", "power2", "exp"};
  rng::Engine eng(rng::splitmix64(spec.seed));
  bool all_pass = true;
  for (std::uint64_t k = 0; k < spec.instances; ++k) {
    const std::size_t v = 1 + rng::uniform_index(eng, spec.max_ranks);
    const std::size_t l = v + rng::uniform_index(eng, spec.max_magnitudes - v + 1);
    std::vector<double> p(v), mags(l);
    for (auto& x : p) x = rng::uniform_open_closed(eng);
    for (auto& x : mags) x = 10.0 * rng::uniform_open_closed(eng);
    std::sort(p.begin(), p.end(), std::greater<>());
    const auto dist = assign::RankedDistribution::from_weights(p);
    const assign::MagnitudeMultiset ms(mags);
    const std::size_t which = k % 3;
    const auto& g = *(costs.begin() + which);
    const double optimal = assign::mean_cost(dist, assign::optimal_assignment(dist, ms), g);
    const double brute = assign::brute_force_minimum(dist, ms, g);
    const bool pass = std::abs(optimal - brute) <= 1e-12 * std::max(1.0, std::abs(brute));
    all_pass = all_pass && pass;
    rows.push_back(Row{k + 1, v, l, cost_names[which], optimal, brute, pass});
  }
  if (spec.format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"instance", r.instance},
                     {"V", r.v},
                     {"L", r.l},
                     {"cost", r.cost},
                     {"optimal", r.optimal},
                     {"brute_force", r.brute},
                     {"pass", r.pass}});
    }
    out << ordered_json{{"schema", format::kOracleSchema},
                        {"seed", spec.seed},
                        {"instances", spec.instances},
                        {"all_pass", all_pass},
                        {"results", arr}}
               .dump(2)
        << '\n';
  } else {
    out << "instance\tV\tL\tcost\toptimal\tbrute_force\tpass\n";
    for (const auto& r : rows) {
      out << r.instance << '\t' << r.v << '\t' << r.l << '\t' << r.cost << '\t'
          << format::shortest(r.optimal) << '\t' << format::shortest(r.brute) << '\t'
          << (r.pass ? "pass" : "fail") << '\n';
    }
  }
  return all_pass ? kExitOk : kExitDomain;
}

}  // namespace

CommandSpec validate(const std::vector<std::string>& args) {
  CLI::App app{"Optimal non-singular coding, maximum-entropy rank laws and random typing", "optcode"};
  app.require_subcommand(1, 1);
  app.allow_extras(false);

  CommandSpec spec;
  std::string format;
  std::string bias;
  bool no_fold = false, keep_punct = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: tsv, csv or json");
    sub->add_option("--output,-o", spec.output, "Write to this file instead of stdout");
  };

  auto* codes = app.add_subcommand("codes", "Optimal non-singular code table (rank, code)");
  common(codes);
  codes->add_option("--alphabet", spec.alphabet, "Alphabet symbols, one byte each")->capture_default_str();
  codes->add_option("--ranks", spec.ranks, "Number of ranks V")->required();
  codes->add_option("--lmin", spec.l_min, "Minimum code length (0 admits the empty string)")->capture_default_str();

  auto* lengths = app.add_subcommand("lengths", "Optimal code length for each rank (i, l_i)");
  common(lengths);
  lengths->add_option("--N", spec.n, "Alphabet size")->required();
  lengths->add_option("--lmin", spec.l_min, "Minimum code length")->capture_default_str();
  lengths->add_option("--imax", spec.i_max, "Largest rank")->capture_default_str();

  auto* figure = app.add_subcommand("figure", "Exact random-typing rank law (i, p_i)");
  common(figure);
  figure->add_option("--N", spec.n, "Alphabet size")->default_val(26);
  figure->add_option("--ps", spec.p_s, "Space (delimiter) probability")->capture_default_str();
  figure->add_option("--lmin", spec.l_min, "Minimum word length")->capture_default_str();
  figure->add_option("--imax", spec.i_max, "Largest rank")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Generate a random-typing corpus and analyse it");
  common(simulate);
  simulate->add_option("--N", spec.n, "Alphabet size (<= 26)")->default_val(26);
  simulate->add_option("--ps", spec.p_s, "Space (delimiter) probability")->capture_default_str();
  simulate->add_option("--lmin", spec.l_min, "Minimum word length")->capture_default_str();
  simulate->add_option("--words", spec.words, "Number of words")->capture_default_str();
  simulate->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  simulate->add_option("--bias", bias, "Comma-separated letter probabilities");
  simulate->add_option("--imax", spec.i_max, "Ranks covered by the optimality check")->capture_default_str();
  simulate->add_option("--corpus-out", spec.corpus_out, "Write the generated words here");

  auto* fit = app.add_subcommand("fit", "Maximum-likelihood rank-distribution fit");
  common(fit);
  fit->add_option("--family", spec.family, "zeta, zipf-mandelbrot, geometric or all")->capture_default_str();
  auto* fit_input = fit->add_option("--input", spec.input, "Text corpus to fit (- for stdin)");
  auto* fit_sample = fit->add_option("--sample", spec.family, "Fit a synthetic sample from this family");
  fit->add_option("--alpha", spec.alpha, "Exponent of the sampled family")->capture_default_str();
  fit->add_option("--b", spec.b, "Zipf-Mandelbrot offset of the sampled family")->capture_default_str();
  fit->add_option("--q", spec.q, "Geometric parameter of the sampled family")->capture_default_str();
  fit->add_option("--samples", spec.samples, "Synthetic sample size")->capture_default_str();
  fit->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  fit->add_flag("--no-fold", no_fold, "Keep letter case when tokenizing");
  fit->add_flag("--keep-punct", keep_punct, "Keep leading/trailing punctuation");
  fit_input->excludes(fit_sample);

  auto* analyze = app.add_subcommand("analyze", "Law-of-abbreviation analysis and optimal recoding of a text");
  common(analyze);
  analyze->add_option("--input", spec.input, "Text corpus (- for stdin)")->required();
  analyze->add_option("--magnitudes", spec.magnitudes, "TSV sidecar: type<TAB>magnitude");
  analyze->add_option("--alphabet", spec.alphabet, "Recoding alphabet")->default_val("abcdefghijklmnopqrstuvwxyz");
  analyze->add_option("--lmin", spec.l_min, "Minimum recoded length")->capture_default_str();
  analyze->add_option("--table-out", spec.table_out, "Also write the frequency table (TSV) here");
  analyze->add_flag("--no-fold", no_fold, "Keep letter case");
  analyze->add_flag("--keep-punct", keep_punct, "Keep leading/trailing punctuation");
  analyze->add_flag("--graphemes", spec.graphemes, "Measure length in grapheme clusters");

  auto* oracle = app.add_subcommand("oracle", "Cross-check sorting optimum against exhaustive search");
  common(oracle);
  oracle->add_option("--instances", spec.instances, "Random instances")->capture_default_str();
  oracle->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  oracle->add_option("--max-ranks", spec.max_ranks, "Largest V (<= 8)")->capture_default_str();
  oracle->add_option("--max-magnitudes", spec.max_magnitudes, "Largest |L| (<= 10)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    throw UsageError(msg);
  }

  const std::pair<CLI::App*, Subcommand> subs[] = {
      {codes, Subcommand::codes},       {lengths, Subcommand::lengths}, {figure, Subcommand::figure},
      {simulate, Subcommand::simulate}, {fit, Subcommand::fit},         {analyze, Subcommand::analyze},
      {oracle, Subcommand::oracle}};
  for (const auto& [app_ptr, kind] : subs) {
    if (app_ptr->parsed()) spec.subcommand = kind;
  }

  spec.fold_case = !no_fold;
  spec.strip_punctuation = !keep_punct;
  if (!bias.empty()) spec.letter_bias = parse_list(bias);

  switch (spec.subcommand) {
    case Subcommand::codes:
      spec.format = format.empty() ? OutputFormat::tsv : parse_format(format);
      require_format(spec, {OutputFormat::tsv, OutputFormat::json}, "tsv or json");
      break;
    case Subcommand::lengths:
      spec.format = format.empty() ? OutputFormat::tsv : parse_format(format);
      break;
    case Subcommand::figure:
      spec.format = format.empty() ? OutputFormat::csv : parse_format(format);
      break;
    case Subcommand::simulate:
    case Subcommand::fit:
      spec.format = format.empty() ? OutputFormat::json : parse_format(format);
      require_format(spec, {OutputFormat::json}, "json");
      break;
    case Subcommand::analyze:
      spec.format = format.empty() ? OutputFormat::json : parse_format(format);
      require_format(spec, {OutputFormat::json, OutputFormat::tsv}, "json or tsv");
      break;
    case Subcommand::oracle:
      spec.format = format.empty() ? OutputFormat::tsv : parse_format(format);
      require_format(spec, {OutputFormat::tsv, OutputFormat::json}, "tsv or json");
      break;
  }

  if (spec.subcommand == Subcommand::fit) {
    const std::string& f = spec.family;
    if (f != "all" && f != "zeta" && f != "zipf-mandelbrot" && f != "zm" && f != "geometric") {
      throw UsageError("--family must be one of zeta, zipf-mandelbrot, geometric, all (got '" + f + "')");
    }
  }
  const bool sampling = spec.subcommand == Subcommand::fit && !spec.input;
  if (sampling && spec.family == "all") {
    throw UsageError("fit --family all needs --input, or --sample naming one family");
  }
  check_domain(spec, sampling);
  return spec;
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  (void)err;
  std::ostringstream buffer;
  Artifacts artifacts;
  int status = kExitOk;
  switch (spec.subcommand) {
    case Subcommand::codes:
      emit_codes(spec, buffer);
      break;
    case Subcommand::lengths:
      emit_lengths(spec, buffer);
      break;
    case Subcommand::figure:
      emit_figure(spec, buffer);
      break;
    case Subcommand::simulate:
      emit_simulation(spec, buffer, artifacts);
      break;
    case Subcommand::fit:
      emit_fit(spec, buffer);
      break;
    case Subcommand::analyze:
      emit_analysis(spec, buffer, artifacts);
      break;
    case Subcommand::oracle:
      status = emit_oracle(spec, buffer);
      break;
  }
  if (spec.output) {
    artifacts.stage(*spec.output, buffer.str());
    artifacts.commit();
  } else {
    artifacts.commit();
    out << buffer.str();
    out.flush();
  }
  return status;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto fail = [&](int code, const std::string& what) {
    std::string line = what;
    for (char& c : line) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    err << "optcode: error: " << line << '\n';
    return code;
  };
  try {
    return run(validate(args), out, err);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    return fail(kExitUsage, e.what());
  } catch (const DomainError& e) {
    return fail(kExitDomain, e.what());
  } catch (const IoError& e) {
    return fail(kExitIo, e.what());
  } catch (const std::exception& e) {
    return fail(kExitDomain, e.what());
  }
}

}  // namespace optcode::cli
