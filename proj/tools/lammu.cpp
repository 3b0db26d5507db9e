/* Copyright 2026 The lammu Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command-line front end. Every command goes through the C interface in
// lammu.h; exit codes are the lammu_status values.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lammu/lammu.h"

namespace {

struct Palette {
  bool out = false;
  bool err = false;
};

Palette palette;

std::optional<Palette> palette_from_env() {
  const char* v = std::getenv("LAMMU_COLOR");
  std::string mode = v ? v : "auto";
  if (mode == "never") return Palette{false, false};
  if (mode == "always") return Palette{true, true};
  if (mode == "auto" || mode.empty())
    return Palette{isatty(STDOUT_FILENO) != 0, isatty(STDERR_FILENO) != 0};
  return std::nullopt;
}

std::string paint(bool on, const char* code, const std::string& s) {
  return on ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}

void diagnose(const std::string& msg) {
  std::cerr << paint(palette.err, "1;31", "error:") << " " << msg;
  if (msg.empty() || msg.back() != '\n') std::cerr << "\n";
}

// Colors the first line (the verdict) of a command's output.
void print_result(const std::string& text, int status) {
  auto nl = text.find('\n');
  std::string head = text.substr(0, nl);
  const char* code = status == LAMMU_OK ? "32" : "33";
  std::cout << paint(palette.out, code, head)
            << (nl == std::string::npos ? "" : text.substr(nl));
}

using OutputPtr = std::unique_ptr<lammu_output, void (*)(lammu_output*)>;

// Prints the output and diagnostic of a command; returns the exit code.
int finish(lammu_status s, lammu_output* raw, bool certificate = false) {
  OutputPtr out(raw, lammu_output_free);
  if (out) {
    if (certificate)
      std::cout << lammu_output_certificate(out.get());
    else
      print_result(lammu_output_text(out.get()), s);
  }
  if (s != LAMMU_OK) diagnose(lammu_last_error());
  return s;
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Positional input or, when absent or "-", standard input.
std::string input_text(const std::string& arg) {
  if (!arg.empty() && arg != "-") return arg;
  std::string s = slurp(std::cin);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

// Parses a term, reporting a parse error; nullptr on failure.
lammu_term* term_or_report(const std::string& text) {
  lammu_term* t = nullptr;
  if (lammu_term_parse(text.c_str(), &t) != LAMMU_OK) {
    diagnose(lammu_last_error());
    return nullptr;
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  auto pal = palette_from_env();
  if (!pal) {
    diagnose("LAMMU_COLOR must be auto, never or always");
    return LAMMU_PARSE_ERROR;
  }
  palette = *pal;

  CLI::App app{"lammu: typing and reduction workbench for the lambda-mu "
               "calculus with intersection and union types"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lammu_version());
  app.footer(
      "Exit codes: 0 success/valid/found, 1 invalid/not found/failure,\n"
      "2 usage or parse error, 3 budget exhausted.\n"
      "Environment: LAMMU_COLOR=auto|never|always.");

  std::string input;
  auto positional = [&](CLI::App* c, const char* what) {
    c->add_option("input", input,
                  std::string(what) + " (read from stdin when absent or -)");
  };

  auto* fmt = app.add_subcommand("fmt", "Pretty-print a term, type or judgment");
  positional(fmt, "Term, type or judgment");
  bool canonical = false;
  fmt->add_flag("--canonical", canonical, "Print types in canonical form");

  auto* reduce = app.add_subcommand("reduce", "Reduce a term");
  positional(reduce, "Term");
  std::string rules = "beta,mu,renaming";
  std::size_t fuel = 1000;
  bool trace = false;
  std::string trace_file;
  reduce->add_option("--rules", rules,
                     "Comma-separated subset of beta,mu,renaming,erasing,eta_mu")
      ->capture_default_str();
  reduce->add_option("--fuel", fuel, "Maximum number of steps")
      ->capture_default_str();
  reduce->add_flag("--trace", trace, "Print every step before the result");
  reduce->add_option("--trace-file", trace_file, "Also write the trace here");

  auto* check_simple =
      app.add_subcommand("check-simple", "Check a simply typed judgment");
  positional(check_simple, "Judgment G |- M : T | D");
  bool emit_cert = false;
  check_simple->add_flag("--certificate", emit_cert,
                         "Print the certificate instead of the derivation");

  auto* infer_simple =
      app.add_subcommand("infer-simple", "Principal simple typing of a term");
  positional(infer_simple, "Term");

  auto* check_iu = app.add_subcommand(
      "check-iu", "Search for an intersection-union derivation");
  positional(check_iu, "Judgment G |- M : T | D");
  std::size_t depth = 8;
  std::size_t width = 2;
  check_iu->add_option("--depth", depth, "Maximum derivation depth")
      ->capture_default_str();
  check_iu->add_option("--width", width,
                       "Maximum intersection/union split width")
      ->capture_default_str();
  check_iu->add_flag("--certificate", emit_cert,
                     "Print the certificate instead of the derivation");

  auto* verify = app.add_subcommand("verify", "Verify a derivation certificate");
  std::string cert_file;
  verify->add_option("file", cert_file,
                     "Certificate file (stdin when absent or -)");

  auto* meta = app.add_subcommand("metatheory", "Run property suites");
  std::string suite = "all";
  std::uint64_t seed = lammu_default_seed();
  std::size_t cases = 100;
  std::size_t budget = 8;
  std::size_t max_size = 10;
  meta->add_option("--suite", suite,
                   "subject-reduction, subject-expansion, term-subst, "
                   "struct-subst, erasing or all")
      ->capture_default_str();
  auto* seed_opt =
      meta->add_option("--seed", seed, "Generator seed")->capture_default_str();
  meta->add_option("--cases", cases, "Cases per suite")->capture_default_str();
  meta->add_option("--budget", budget, "Search depth for witness searches")
      ->capture_default_str();
  meta->add_option("--max-size", max_size, "Largest generated term")
      ->capture_default_str();

  auto* examples = app.add_subcommand(
      "examples", "Print a bundled example's certificate (list when no name)");
  std::string example;
  bool show = false;
  examples->add_option("name", example, lammu_example_names());
  examples->add_flag("--show", show,
                     "Print the derivation and outcomes instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LAMMU_PARSE_ERROR;
  }

  lammu_output* out = nullptr;

  if (*fmt) {
    std::string text = input_text(input);
    lammu_status s = lammu_fmt(text.c_str(), canonical ? 1 : 0, &out);
    return finish(s, out);
  }
  if (*reduce) {
    lammu_term* t = term_or_report(input_text(input));
    if (!t) return LAMMU_PARSE_ERROR;
    bool want_trace = trace || !trace_file.empty();
    lammu_status s = lammu_reduce(t, rules.c_str(), fuel, want_trace, &out);
    lammu_term_free(t);
    if (out && !trace_file.empty()) {
      std::string text = lammu_output_text(out);
      if (!write_file(trace_file, text)) {
        lammu_output_free(out);
        diagnose("cannot write " + trace_file);
        return LAMMU_PARSE_ERROR;
      }
      if (!trace) {
        // Only the final term goes to stdout.
        auto cut = text.rfind('\n', text.size() - 2);
        std::string last = cut == std::string::npos ? text : text.substr(cut + 1);
        std::cout << last;
        lammu_output_free(out);
        if (s != LAMMU_OK) diagnose(lammu_last_error());
        return s;
      }
    }
    return finish(s, out);
  }
  if (*check_simple) {
    std::string text = input_text(input);
    lammu_status s = lammu_check_simple(text.c_str(), &out);
    return finish(s, out, emit_cert && s == LAMMU_OK);
  }
  if (*infer_simple) {
    lammu_term* t = term_or_report(input_text(input));
    if (!t) return LAMMU_PARSE_ERROR;
    lammu_status s = lammu_infer_simple(t, &out);
    lammu_term_free(t);
    return finish(s, out);
  }
  if (*check_iu) {
    std::string text = input_text(input);
    lammu_status s = lammu_check_iu(text.c_str(), depth, width, &out);
    return finish(s, out, emit_cert && s == LAMMU_OK);
  }
  if (*verify) {
    std::string text;
    if (cert_file.empty() || cert_file == "-") {
      text = slurp(std::cin);
    } else {
      std::ifstream f(cert_file, std::ios::binary);
      if (!f) {
        diagnose("cannot read " + cert_file);
        return LAMMU_PARSE_ERROR;
      }
      text = slurp(f);
    }
    lammu_status s = lammu_verify(text.c_str(), &out);
    return finish(s, out);
  }
  if (*meta) {
    std::cout << "# seed " << seed << (seed_opt->count() ? "" : " (default)")
              << ", cases " << cases << ", budget " << budget
              << ", max-size " << max_size << "\n";
    lammu_status s = lammu_metatheory(suite.c_str(), seed, cases, budget,
                                      max_size, &out);
    return finish(s, out);
  }
  if (*examples) {
    if (example.empty()) {
      std::string names = lammu_example_names();
      for (char& c : names)
        if (c == ',') c = '\n';
      std::cout << names << "\n";
      return LAMMU_OK;
    }
    lammu_status s = lammu_example(example.c_str(), &out);
    return finish(s, out, !show && s == LAMMU_OK);
  }
  return LAMMU_PARSE_ERROR;
}
