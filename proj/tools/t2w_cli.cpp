// t2w: command-line front end over the t2w C interface.
//
// Exit codes: 0 success / affirmative verdict, 1 document parse error,
// 2 illegal weight system, 3 negative verdict, 4 other failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "t2w/t2w.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitIllegal = 2;
constexpr int kExitNegative = 3;
constexpr int kExitFailure = 4;

struct SystemDeleter {
  void operator()(t2w_system* w) const { t2w_system_free(w); }
};
struct DecompositionDeleter {
  void operator()(t2w_decomposition* d) const { t2w_decomposition_free(d); }
};
struct EnumeratorDeleter {
  void operator()(t2w_enumerator* e) const { t2w_enumerator_free(e); }
};
struct StringDeleter {
  void operator()(char* s) const { t2w_string_free(s); }
};

using System = std::unique_ptr<t2w_system, SystemDeleter>;
using Decomposition = std::unique_ptr<t2w_decomposition, DecompositionDeleter>;
using Enumerator = std::unique_ptr<t2w_enumerator, EnumeratorDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind to main with a specific exit code; message already printed.
struct Exit {
  int code;
};

int exit_code_for(t2w_status status) {
  switch (status) {
    case T2W_OK: return kExitOk;
    case T2W_ERR_PARSE: return kExitParse;
    case T2W_ERR_ILLEGAL_SYSTEM: return kExitIllegal;
    default: return kExitFailure;
  }
}

void check(t2w_status status, const std::string& context) {
  if (status == T2W_OK) return;
  std::cerr << "t2w: " << context << ": " << t2w_status_name(status) << ": " << t2w_last_error()
            << "\n";
  throw Exit{exit_code_for(status)};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "t2w: cannot read " << path << "\n";
    throw Exit{kExitFailure};
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

System load(const std::string& path) {
  const std::string text = read_input(path);
  t2w_system* raw = nullptr;
  check(t2w_system_parse(text.data(), text.size(), &raw), path);
  return System(raw);
}

// Prints the report to stderr and exits 2 when the system is illegal.
void require_legal(const t2w_system* w, const std::string& path) {
  int legal = 0;
  char* raw = nullptr;
  check(t2w_system_validate(w, &legal, &raw), path);
  String report(raw);
  if (!legal) {
    std::cerr << path << ": " << report.get();
    throw Exit{kExitIllegal};
  }
}

std::string serialize(const t2w_system* w) {
  char* raw = nullptr;
  check(t2w_system_serialize(w, &raw), "serialize");
  String text(raw);
  return std::string(text.get());
}

int cmd_validate(const std::string& path) {
  System w = load(path);
  int legal = 0;
  char* raw = nullptr;
  check(t2w_system_validate(w.get(), &legal, &raw), path);
  String report(raw);
  if (legal) {
    std::cout << report.get();
    return kExitOk;
  }
  std::cerr << path << ": " << report.get();
  return kExitIllegal;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const std::string& mode) {
  System a = load(path_a);
  System b = load(path_b);
  require_legal(a.get(), path_a);
  require_legal(b.get(), path_b);
  int iso = 0;
  char* raw = nullptr;
  check(t2w_system_compare(a.get(), b.get(), mode == "weak" ? T2W_MODE_WEAK : T2W_MODE_STRICT,
                           &iso, &raw),
        "compare");
  String witness(raw);
  if (!iso) {
    std::cout << "not isomorphic\n";
    return kExitNegative;
  }
  std::cout << "isomorphic";
  if (witness) std::cout << " " << witness.get();
  std::cout << "\n";
  return kExitOk;
}

int cmd_localmodels(const std::string& path) {
  System w = load(path);
  require_legal(w.get(), path);
  char* raw = nullptr;
  check(t2w_system_localmodels(w.get(), &raw), path);
  String listing(raw);
  std::cout << listing.get();
  return kExitOk;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) {
    std::cerr << "t2w: cannot write " << path << "\n";
    throw Exit{kExitFailure};
  }
}

int cmd_decompose(const std::string& path, const std::string& out_dir) {
  System w = load(path);
  require_legal(w.get(), path);
  t2w_decomposition* raw = nullptr;
  check(t2w_system_decompose(w.get(), &raw), "decompose");
  Decomposition d(raw);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "t2w: cannot create " << out_dir << ": " << ec.message() << "\n";
    return kExitFailure;
  }
  const std::filesystem::path dir(out_dir);

  t2w_system* part = nullptr;
  check(t2w_decomposition_manifold(d.get(), &part), "decompose");
  System manifold(part);
  write_file(dir / "manifold.json", serialize(manifold.get()) + "\n");

  const std::size_t count = t2w_decomposition_piece_count(d.get());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    t2w_system* piece_raw = nullptr;
    check(t2w_decomposition_piece(d.get(), i, &piece_raw), "decompose");
    System piece(piece_raw);
    names.push_back("piece_" + std::to_string(i + 1) + ".json");
    write_file(dir / names.back(), serialize(piece.get()) + "\n");
  }
  std::vector<const char*> name_ptrs;
  for (const auto& n : names) name_ptrs.push_back(n.c_str());
  char* manifest_raw = nullptr;
  check(t2w_decomposition_manifest(d.get(), name_ptrs.data(), "manifold.json", &manifest_raw),
        "decompose");
  String manifest(manifest_raw);
  write_file(dir / "manifest.json", std::string(manifest.get()) + "\n");
  std::cout << "manifold part and " << count << " simple piece(s) written to " << out_dir << "\n";
  return kExitOk;
}

int cmd_generate_suspension(const std::vector<std::int64_t>& pairs, int orientation) {
  t2w_system* raw = nullptr;
  check(t2w_generate_suspension(pairs[0], pairs[1], pairs[2], pairs[3], orientation, &raw),
        "generate suspension");
  System w(raw);
  std::cout << serialize(w.get()) << "\n";
  return kExitOk;
}

int cmd_generate_weighted_projective(const std::vector<std::int64_t>& weights) {
  t2w_system* raw = nullptr;
  check(t2w_generate_weighted_projective(weights[0], weights[1], weights[2], &raw),
        "generate weighted-projective");
  System w(raw);
  std::cout << serialize(w.get()) << "\n";
  return kExitOk;
}

int cmd_enumerate(const t2w_bounds& bounds) {
  t2w_enumerator* raw = nullptr;
  check(t2w_enumerator_create(&bounds, &raw), "enumerate");
  Enumerator en(raw);
  std::size_t count = 0;
  for (;;) {
    t2w_system* w_raw = nullptr;
    const t2w_status status = t2w_enumerator_next(en.get(), &w_raw);
    if (status == T2W_DONE) break;
    check(status, "enumerate");
    System w(w_raw);
    std::cout << serialize(w.get()) << "\n";
    ++count;
  }
  std::cerr << count << " weight system(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight systems of T^2-actions on closed orientable Alexandrov 4-spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(t2w_version()));

  std::string file_a, file_b, mode = "strict", out_dir;

  auto* validate = app.add_subcommand("validate", "check legality of a weight system document");
  validate->add_option("file", file_a, "document path, or - for standard input")->required();

  auto* compare = app.add_subcommand("compare", "decide isomorphism of two weight systems");
  compare->add_option("file_a", file_a)->required();
  compare->add_option("file_b", file_b)->required();
  compare->add_option("--mode", mode, "strict or weak")
      ->check(CLI::IsMember({"strict", "weak"}))
      ->capture_default_str();

  auto* localmodels = app.add_subcommand("localmodels", "orbit type and lens space per fixed point");
  localmodels->add_option("file", file_a)->required();

  auto* decompose = app.add_subcommand("decompose", "split into a manifold part and simple pieces");
  decompose->add_option("file", file_a)->required();
  decompose->add_option("--out", out_dir, "output directory")->required();

  auto* generate = app.add_subcommand("generate", "emit an example family member");
  generate->require_subcommand(1);
  std::vector<std::int64_t> suspension_pairs, projective_weights;
  int orientation = 1;
  auto* suspension = generate->add_subcommand("suspension", "suspension of a lens space");
  suspension->add_option("pairs", suspension_pairs, "p q m n")->required()->expected(4);
  suspension->add_option("--orientation", orientation, "1 or -1")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  auto* projective = generate->add_subcommand("weighted-projective", "weighted projective plane");
  projective->add_option("weights", projective_weights, "r1 r2 r3")->required()->expected(3);

  auto* enumerate = app.add_subcommand("enumerate", "list legal weight systems within bounds");
  t2w_bounds bounds{0, 1, 3, 2, 0, 2};
  enumerate->add_option("--max-genus", bounds.max_genus)->capture_default_str();
  enumerate->add_option("--max-cycles", bounds.max_cycles, "boundary components (s + t)")
      ->capture_default_str();
  enumerate->add_option("--max-cycle-length", bounds.max_cycle_length)->capture_default_str();
  enumerate->add_option("--max-weight-entry", bounds.max_weight_entry)->capture_default_str();
  enumerate->add_option("--max-exceptional", bounds.max_exceptional)->capture_default_str();
  enumerate->add_option("--max-alpha", bounds.max_alpha)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file_a);
    if (*compare) return cmd_compare(file_a, file_b, mode);
    if (*localmodels) return cmd_localmodels(file_a);
    if (*decompose) return cmd_decompose(file_a, out_dir);
    if (*suspension) return cmd_generate_suspension(suspension_pairs, orientation);
    if (*projective) return cmd_generate_weighted_projective(projective_weights);
    if (*enumerate) return cmd_enumerate(bounds);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitFailure;
}
