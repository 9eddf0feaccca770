#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"

namespace entrothresh::cli {

namespace {

template <auto Free>
struct Deleter {
  template <typename T>
  void operator()(T* p) const noexcept {
    Free(p);
  }
};

using ImagePtr = std::unique_ptr<et_image, Deleter<et_image_free>>;
using BiLevelPtr = std::unique_ptr<et_bilevel, Deleter<et_bilevel_free>>;
using HistogramPtr = std::unique_ptr<et_histogram, Deleter<et_histogram_free>>;
using TablePtr = std::unique_ptr<et_sweep_table, Deleter<et_sweep_table_free>>;

// Carries the exit status out of the orchestration code.
class Failure : public std::runtime_error {
 public:
  Failure(int status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

int exit_status_for(et_status status, bool writing) {
  switch (status) {
    case ET_OK: return kExitOk;
    case ET_ERR_INVALID_ARGUMENT:
    case ET_ERR_DOMAIN: return kExitUsage;
    case ET_ERR_FILE_NOT_FOUND:
    case ET_ERR_MALFORMED:
    case ET_ERR_UNSUPPORTED_FORMAT: return kExitInput;
    case ET_ERR_INFEASIBLE: return kExitInfeasible;
    case ET_ERR_IO: return writing ? kExitOutput : kExitInput;
    case ET_ERR_INTERNAL: break;
  }
  return kExitOutput;
}

void check(et_status status, bool writing = false) {
  if (status != ET_OK) {
    throw Failure(exit_status_for(status, writing), et_last_error());
  }
}

std::string index_text(double index) {
  char buf[64];
  et_format_index(index, buf, sizeof buf);
  return buf;
}

const char* kind_name(et_entropy_kind kind) {
  switch (kind) {
    case ET_SHANNON: return "shannon";
    case ET_TSALLIS: return "tsallis";
    case ET_KANIADAKIS: return "kaniadakis";
  }
  return "?";
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty()) {
      double v = 0.0;
      const auto* end = field.data() + field.size();
      const auto [ptr, ec] = std::from_chars(field.data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw Failure(kExitUsage, "cannot parse grid value '" +
                                      std::string(field) + "'");
      }
      grid.push_back(v);
    }
    start = comma + 1;
  }
  return grid;
}

TablePtr run_sweep(const et_image* img, et_entropy_kind kind,
                   const RunConfig& config) {
  et_sweep_table* raw = nullptr;
  check(et_sweep(img, kind, config.grid.data(), config.grid.size(),
                 config.connectivity, config.allow_extended_index ? 1 : 0,
                 &raw));
  return TablePtr(raw);
}

void summarize(const et_sweep_table* table, const RunConfig& config,
               std::ostream& os) {
  const auto kind = et_sweep_table_kind(table);
  et_sweep_row best{};
  check(et_select_best(table, &best));
  os << "best " << kind_name(kind) << ": index " << index_text(best.index)
     << ", threshold " << best.threshold << ", edge pixels "
     << best.edge_pixels << "\n";
  std::vector<et_jump> jumps(et_sweep_table_size(table));
  std::size_t count = 0;
  if (et_sweep_table_size(table) >= 2) {
    check(et_detect_transitions(table, config.jump_tolerance, jumps.data(),
                                jumps.size(), &count));
  }
  for (std::size_t i = 0; i < count; ++i) {
    os << "warning: " << kind_name(kind) << " threshold jumps from "
       << jumps[i].threshold_before << " to " << jumps[i].threshold_after
       << " between indices " << index_text(jumps[i].index_before) << " and "
       << index_text(jumps[i].index_after) << " (possible texture transition)\n";
  }
}

void write_image(const et_image* img, int threshold, const std::string& path) {
  et_bilevel* raw = nullptr;
  check(et_binarize(img, threshold, &raw));
  BiLevelPtr bilevel(raw);
  check(et_bilevel_write(bilevel.get(), path.c_str()), true);
}

int run_single(const et_image* img, const RunConfig& config, std::ostream& out) {
  et_histogram* raw = nullptr;
  check(et_histogram_build(img, &raw));
  HistogramPtr hist(raw);
  const et_functional f{*config.entropy, config.index.value_or(0.0)};
  if (!config.allow_extended_index && f.kind != ET_SHANNON &&
      !(f.index > 0.0 && f.index < 1.0)) {
    throw Failure(kExitUsage, "entropic index " + index_text(f.index) +
                                  " is outside (0, 1); pass "
                                  "--allow-extended-index to permit it");
  }
  et_threshold_result result{};
  check(et_optimize_threshold(hist.get(), f, &result));
  out << "entropy: " << kind_name(f.kind);
  if (f.kind != ET_SHANNON) out << " index " << index_text(f.index);
  out << "\nthreshold: " << result.threshold << "\n";
  out.precision(12);
  out << "total entropy: " << result.total_entropy << "\n";
  if (config.output_image_path) {
    write_image(img, result.threshold, *config.output_image_path);
  }
  return kExitOk;
}

void emit_report(const et_sweep_table* tsallis, const et_sweep_table* kaniadakis,
                 const RunConfig& config, std::ostream& out) {
  if (config.report_path) {
    check(et_write_csv(tsallis, kaniadakis, config.report_path->c_str()), true);
    return;
  }
  std::size_t length = 0;
  check(et_format_csv(tsallis, kaniadakis, nullptr, 0, &length));
  std::string text(length + 1, '\0');
  check(et_format_csv(tsallis, kaniadakis, text.data(), text.size(), &length));
  text.resize(length);
  out << text;
}

int run_tables(const et_image* img, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  // Summary lines go to stdout when the CSV has its own file, else stderr.
  std::ostream& summary = config.report_path ? out : err;
  if (config.mode == Mode::Sweep) {
    auto table = run_sweep(img, *config.entropy, config);
    summarize(table.get(), config, summary);
    if (config.output_image_path) {
      et_sweep_row best{};
      check(et_select_best(table.get(), &best));
      write_image(img, best.threshold, *config.output_image_path);
    }
    const bool is_tsallis = *config.entropy == ET_TSALLIS;
    emit_report(is_tsallis ? table.get() : nullptr,
                is_tsallis ? nullptr : table.get(), config, out);
    return kExitOk;
  }

  auto tsallis = run_sweep(img, ET_TSALLIS, config);
  auto kaniadakis = run_sweep(img, ET_KANIADAKIS, config);
  summarize(tsallis.get(), config, summary);
  summarize(kaniadakis.get(), config, summary);
  std::vector<et_mirror_pair> pairs(config.grid.size());
  std::size_t count = 0;
  check(et_mirror_check(tsallis.get(), kaniadakis.get(), pairs.data(),
                        pairs.size(), &count));
  int widest = 0;
  for (std::size_t i = 0; i < count; ++i) {
    widest = std::max(widest, std::abs(pairs[i].difference));
  }
  if (count > 0) {
    summary << "mirror check: max |T(x) - K(1-x)| = " << widest << " over "
            << count << " pairs\n";
  }
  emit_report(tsallis.get(), kaniadakis.get(), config, out);
  return kExitOk;
}

}  // namespace

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out,
                        std::ostream& err) {
  CLI::App app{"Entropy-maximizing bi-level thresholding of grayscale images",
               "entrothresh"};
  RunConfig config;
  std::string mode = "single";
  std::string entropy;
  std::optional<std::string> grid_text;
  bool grid_default = false;

  app.add_option("--input", config.input_path, "Input image (PGM P5 or PNG)")
      ->required();
  app.add_option("--mode", mode, "single, sweep or compare")
      ->check(CLI::IsMember({"single", "sweep", "compare"}));
  app.add_option("--entropy", entropy, "shannon, tsallis or kaniadakis")
      ->check(CLI::IsMember({"shannon", "tsallis", "kaniadakis"}));
  app.add_option("--index", config.index, "Entropic index q or kappa (single mode)");
  auto* grid_opt =
      app.add_option("--grid", grid_text, "Comma-separated entropic indices");
  auto* default_opt = app.add_flag("--grid-default", grid_default,
                                   "Use the built-in index grid");
  grid_opt->excludes(default_opt);
  app.add_option("--connectivity", config.connectivity, "Edge neighbourhood, 4 or 8")
      ->check(CLI::IsMember({4, 8}));
  app.add_option("--out-image", config.output_image_path,
                 "Write the bi-level image here (PGM P5)");
  app.add_option("--report", config.report_path, "Write the CSV report here");
  app.add_option("--jump-tolerance", config.jump_tolerance,
                 "Threshold jump (gray levels) flagged as a transition")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--allow-extended-index", config.allow_extended_index,
               "Permit indices outside (0, 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return ParseOutcome{std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }

  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << "\n";
    return ParseOutcome{std::nullopt, kExitUsage};
  };

  static const std::map<std::string, et_entropy_kind> kinds{
      {"shannon", ET_SHANNON},
      {"tsallis", ET_TSALLIS},
      {"kaniadakis", ET_KANIADAKIS}};
  if (!entropy.empty()) config.entropy = kinds.at(entropy);

  if (mode == "single") {
    config.mode = Mode::Single;
    if (!config.entropy) return usage("single mode requires --entropy");
    if (*config.entropy == ET_SHANNON && config.index) {
      return usage("shannon entropy takes no --index");
    }
    if (*config.entropy != ET_SHANNON && !config.index) {
      return usage("single mode requires --index for tsallis and kaniadakis");
    }
    if (grid_text || grid_default) return usage("single mode takes no grid");
    if (config.report_path) return usage("single mode writes no report");
    return ParseOutcome{config, kExitOk};
  }

  config.mode = mode == "sweep" ? Mode::Sweep : Mode::Compare;
  if (config.index) return usage("--index is for single mode; use --grid");
  if (config.mode == Mode::Sweep) {
    if (!config.entropy || *config.entropy == ET_SHANNON) {
      return usage("sweep mode requires --entropy tsallis or kaniadakis");
    }
  } else {
    if (config.entropy) return usage("compare mode runs both entropies");
    if (config.output_image_path) {
      return usage("compare mode writes no image; use single or sweep mode");
    }
  }
  if (grid_default) {
    const std::size_t n = et_default_grid(nullptr, 0);
    config.grid.resize(n);
    et_default_grid(config.grid.data(), n);
  } else if (grid_text) {
    try {
      config.grid = parse_grid(*grid_text);
    } catch (const Failure& f) {
      return usage(f.what());
    }
  } else {
    return usage("sweep and compare modes require --grid or --grid-default");
  }
  if (config.grid.empty()) return usage("index grid is empty");
  return ParseOutcome{config, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    et_image* raw = nullptr;
    check(et_image_load(config.input_path.c_str(), &raw));
    ImagePtr img(raw);
    if (config.mode == Mode::Single) return run_single(img.get(), config, out);
    return run_tables(img.get(), config, out, err);
  } catch (const Failure& f) {
    err << "error: " << f.what() << "\n";
    return f.status();
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_status;
  return run(*parsed.config, out, err);
}

}  // namespace entrothresh::cli
