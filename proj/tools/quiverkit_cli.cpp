// quiverkit command-line tool. Talks to the library through the C API only.
//
// Exit codes: 0 property holds / construction succeeded, 1 property fails,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiverkit/quiverkit.h"

namespace {

using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct QuiverFree {
  void operator()(qk_quiver* q) const { qk_quiver_free(q); }
};
struct MorphismFree {
  void operator()(qk_morphism* m) const { qk_morphism_free(m); }
};
struct StringFree {
  void operator()(char* s) const { qk_string_free(s); }
};
using QuiverPtr = std::unique_ptr<qk_quiver, QuiverFree>;
using MorphismPtr = std::unique_ptr<qk_morphism, MorphismFree>;
using StringPtr = std::unique_ptr<char, StringFree>;

// Raised for anything that maps to exit code 2.
struct InputError {
  std::string message;
};

void ok_or_throw(qk_status s, const std::string& context) {
  if (s != QK_OK) {
    throw InputError{context + ": " + qk_status_name(s) + ": " + qk_last_error()};
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuiverPtr load_quiver(const std::string& path) {
  qk_quiver* q = nullptr;
  ok_or_throw(qk_quiver_parse(read_input(path).c_str(), &q), path);
  return QuiverPtr(q);
}

MorphismPtr load_morphism(const std::string& path) {
  qk_morphism* m = nullptr;
  ok_or_throw(qk_morphism_parse(read_input(path).c_str(), &m), path);
  return MorphismPtr(m);
}

std::string take(char* s) { return std::string(StringPtr(s).get()); }

std::string quiver_text(const qk_quiver* q, const std::string& format) {
  char* out = nullptr;
  if (format == "dot") {
    ok_or_throw(qk_quiver_to_dot(q, &out), "dot export");
  } else {
    ok_or_throw(qk_quiver_serialize(q, &out), "serialize");
  }
  return take(out);
}

std::string morphism_text(const qk_morphism* m) {
  char* out = nullptr;
  ok_or_throw(qk_morphism_serialize(m, &out), "serialize");
  return take(out);
}

QuiverPtr domain_of(const qk_morphism* m) {
  qk_quiver* q = nullptr;
  ok_or_throw(qk_morphism_domain(m, &q), "domain");
  return QuiverPtr(q);
}

QuiverPtr codomain_of(const qk_morphism* m) {
  qk_quiver* q = nullptr;
  ok_or_throw(qk_morphism_codomain(m, &q), "codomain");
  return QuiverPtr(q);
}

struct Options {
  std::size_t vmax = 3;
  std::size_t emax = 3;
  std::uint64_t budget = 0;
  std::string format = "json";
  bool witness = false;
};

// Prints a check verdict and turns it into an exit code.
int verdict(const std::string& command, int holds, char* report_json, const Options& opt) {
  json report = json::parse(take(report_json));
  json out{{"command", command}, {"holds", holds != 0}};
  out["violations"] = report["violations"];
  if (opt.witness) {
    out["witness"] = report["witness"];
    if (report.contains("criterion")) out["criterion"] = report["criterion"];
  }
  std::cout << out.dump(2) << "\n";
  return holds ? kHolds : kFails;
}

using QuiverCheck = qk_status (*)(const qk_quiver*, int*, char**);
using MorphismCheck = qk_status (*)(const qk_morphism*, int*, char**);

int run_quiver_check(const std::string& command, const std::string& path, QuiverCheck check,
                     const Options& opt) {
  QuiverPtr q = load_quiver(path);
  int holds = 0;
  char* report = nullptr;
  ok_or_throw(check(q.get(), &holds, &report), command);
  return verdict(command, holds, report, opt);
}

int run_morphism_check(const std::string& command, const std::string& path, MorphismCheck check,
                       const Options& opt) {
  MorphismPtr m = load_morphism(path);
  int holds = 0;
  char* report = nullptr;
  ok_or_throw(check(m.get(), &holds, &report), command);
  return verdict(command, holds, report, opt);
}

int run_validate(const std::string& path, const Options& opt) {
  int ok = 0;
  char* report = nullptr;
  ok_or_throw(qk_quiver_validate_document(read_input(path).c_str(), &ok, &report), path);
  return verdict("validate", ok, report, opt);
}

// Quiver-valued constructions.
int run_quiver_construction(const std::string& path,
                            qk_status (*build)(const qk_quiver*, qk_quiver**),
                            const Options& opt) {
  QuiverPtr q = load_quiver(path);
  qk_quiver* out = nullptr;
  ok_or_throw(build(q.get(), &out), "construction");
  QuiverPtr result(out);
  std::cout << quiver_text(result.get(), opt.format);
  return kHolds;
}

// Morphism-valued constructions; `dot_side` picks the quiver drawn by --format dot.
enum class Side { domain, codomain };

int print_morphism(const qk_morphism* m, Side dot_side, const Options& opt) {
  if (opt.format == "dot") {
    QuiverPtr q = dot_side == Side::domain ? domain_of(m) : codomain_of(m);
    std::cout << quiver_text(q.get(), "dot");
  } else {
    std::cout << morphism_text(m);
  }
  return kHolds;
}

// Envelope and cover: the new quiver, or with --witness the map exhibiting it.
int print_construction(const qk_morphism* m, Side side, const Options& opt) {
  if (opt.witness && opt.format == "json") return print_morphism(m, side, opt);
  QuiverPtr q = side == Side::domain ? domain_of(m) : codomain_of(m);
  std::cout << quiver_text(q.get(), opt.format);
  return kHolds;
}

int run_pair_construction(const std::string& left, const std::string& right,
                          qk_status (*build)(const qk_quiver*, const qk_quiver*, qk_morphism**,
                                             qk_morphism**),
                          Side dot_side, const Options& opt) {
  QuiverPtr g = load_quiver(left);
  QuiverPtr h = load_quiver(right);
  qk_morphism* a = nullptr;
  qk_morphism* b = nullptr;
  ok_or_throw(build(g.get(), h.get(), &a, &b), "construction");
  MorphismPtr first(a), second(b);
  if (opt.format == "dot") {
    QuiverPtr q = dot_side == Side::domain ? domain_of(first.get()) : codomain_of(first.get());
    std::cout << quiver_text(q.get(), "dot");
  } else {
    std::cout << "{\"first\":\n" << morphism_text(first.get()) << ",\n\"second\":\n"
              << morphism_text(second.get()) << "}\n";
  }
  return kHolds;
}

int run_homs(const std::string& left, const std::string& right, const Options& opt) {
  QuiverPtr g = load_quiver(left);
  QuiverPtr h = load_quiver(right);
  std::uint64_t count = 0;
  ok_or_throw(qk_count_homs(g.get(), h.get(), opt.budget, &count), "homs");
  json out{{"command", "homs"}, {"count", count}};
  if (opt.witness) {
    char* list = nullptr;
    ok_or_throw(qk_list_homs(g.get(), h.get(), opt.budget, &list), "homs");
    out["homs"] = json::parse(take(list));
  }
  std::cout << out.dump(2) << "\n";
  return kHolds;
}

int run_verify(const Options& opt) {
  int passed = 0;
  char* report = nullptr;
  ok_or_throw(qk_verify_theorems(opt.vmax, opt.emax, opt.budget, &passed, &report),
              "verify-theorems");
  json out{{"command", "verify-theorems"},
           {"vmax", opt.vmax},
           {"emax", opt.emax},
           {"holds", passed != 0},
           {"suites", json::parse(take(report))}};
  std::cout << out.dump(2) << "\n";
  return passed ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverkit: injective envelopes and projective covers of finite quivers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qk_version()));

  Options opt;
  app.add_option("--vmax", opt.vmax, "Vertex bound for verify-theorems")->check(CLI::NonNegativeNumber);
  app.add_option("--emax", opt.emax, "Edge bound for verify-theorems")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", opt.budget, "Homomorphism search budget (0 = default)");
  app.add_option("--format", opt.format, "Output format for constructions")
      ->check(CLI::IsMember({"json", "dot"}));
  app.add_flag("--witness", opt.witness, "Include counterexamples / witnesses");
  app.fallthrough();

  std::string a;
  std::string b;
  std::function<int()> action;

  auto one_file = [&](const char* name, const char* help, std::function<int()> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", a, "Input document ('-' for stdin)")->required();
    sub->callback([&action, run] { action = run; });
  };
  auto two_files = [&](const char* name, const char* help, std::function<int()> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("first", a, "First input document")->required();
    sub->add_option("second", b, "Second input document")->required();
    sub->callback([&action, run] { action = run; });
  };

  one_file("validate", "Check a quiver document", [&] { return run_validate(a, opt); });
  one_file("is-loaded", "Every ordered vertex pair has an edge",
           [&] { return run_quiver_check("is-loaded", a, qk_is_loaded, opt); });
  one_file("is-injective", "Injective with respect to all monomorphisms",
           [&] { return run_quiver_check("is-injective", a, qk_is_mono_injective, opt); });
  one_file("is-projective", "Projective with respect to all epimorphisms",
           [&] { return run_quiver_check("is-projective", a, qk_is_epi_projective, opt); });
  one_file("essential", "Is a monomorphism (morphism document) mono-essential",
           [&] { return run_morphism_check("essential", a, qk_is_mono_essential, opt); });
  one_file("coessential", "Is an epimorphism (morphism document) epi-coessential",
           [&] { return run_morphism_check("coessential", a, qk_is_epi_coessential, opt); });
  one_file("loading", "Add an edge for every vertex pair lacking one",
           [&] { return run_quiver_construction(a, qk_loading, opt); });
  one_file("explosion", "Independent vertices plus the edges made disjoint",
           [&] { return run_quiver_construction(a, qk_explosion, opt); });
  one_file("envelope", "Mono-injective envelope (--witness: its embedding)", [&] {
    QuiverPtr q = load_quiver(a);
    qk_morphism* m = nullptr;
    ok_or_throw(qk_envelope(q.get(), &m), "envelope");
    return print_construction(MorphismPtr(m).get(), Side::codomain, opt);
  });
  one_file("cover", "Epi-projective cover (--witness: its covering map)", [&] {
    QuiverPtr q = load_quiver(a);
    qk_morphism* m = nullptr;
    ok_or_throw(qk_cover(q.get(), &m), "cover");
    return print_construction(MorphismPtr(m).get(), Side::domain, opt);
  });
  two_files("homs", "Count (and with --witness list) homomorphisms",
            [&] { return run_homs(a, b, opt); });
  two_files("product", "Tensor product with its projections", [&] {
    return run_pair_construction(a, b, qk_product, Side::domain, opt);
  });
  two_files("coproduct", "Disjoint union with its injections", [&] {
    return run_pair_construction(a, b, qk_coproduct, Side::codomain, opt);
  });
  two_files("equalizer", "Equalizer of two parallel morphisms", [&] {
    MorphismPtr f = load_morphism(a);
    MorphismPtr g = load_morphism(b);
    qk_morphism* m = nullptr;
    ok_or_throw(qk_equalizer(f.get(), g.get(), &m), "equalizer");
    return print_morphism(MorphismPtr(m).get(), Side::domain, opt);
  });
  two_files("coequalizer", "Coequalizer of two parallel morphisms", [&] {
    MorphismPtr f = load_morphism(a);
    MorphismPtr g = load_morphism(b);
    qk_morphism* m = nullptr;
    ok_or_throw(qk_coequalizer(f.get(), g.get(), &m), "coequalizer");
    return print_morphism(MorphismPtr(m).get(), Side::codomain, opt);
  });
  auto* verify = app.add_subcommand("verify-theorems", "Run the exhaustive oracle suites");
  verify->callback([&] { action = [&] { return run_verify(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
