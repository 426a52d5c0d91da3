#include "checks.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "pert/cli.hpp"
#include "pert/problem.hpp"
#include "pert/series.hpp"

namespace pert::checks {

namespace {

mpq_class random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::vector<mpq_class> c;
  for (int k = 0; k <= order; ++k) c.push_back(random_rational(rng));
  return TruncatedSeries::rational(c);
}

TruncatedSeries one(int order) { return TruncatedSeries::constant(Coefficient(1), order); }

// Expression trees for the parser checks.
struct Node {
  enum Kind { X, Eps, Lit, Add, Sub, Mul, Pow, Neg } kind;
  mpq_class value;
  int exponent = 0;
  std::unique_ptr<Node> a, b;
};

std::unique_ptr<Node> random_tree(std::mt19937& rng, int depth) {
  auto n = std::make_unique<Node>();
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  n->kind = static_cast<Node::Kind>(pick(rng));
  switch (n->kind) {
    case Node::Lit: n->value = abs(random_rational(rng)); break;
    case Node::Add:
    case Node::Sub:
    case Node::Mul:
      n->a = random_tree(rng, depth - 1);
      n->b = random_tree(rng, depth - 1);
      break;
    case Node::Pow:
      n->a = random_tree(rng, depth - 1);
      n->exponent = std::uniform_int_distribution<int>(0, 3)(rng);
      break;
    case Node::Neg: n->a = random_tree(rng, depth - 1); break;
    default: break;
  }
  return n;
}

// Fully parenthesised, so the text does not lean on precedence rules.
std::string print(const Node& n) {
  switch (n.kind) {
    case Node::X: return "x";
    case Node::Eps: return "eps";
    case Node::Lit: return n.value.get_den() == 1 ? n.value.get_str() : "(" + n.value.get_str() + ")";
    case Node::Add: return "(" + print(*n.a) + " + " + print(*n.b) + ")";
    case Node::Sub: return "(" + print(*n.a) + " - " + print(*n.b) + ")";
    case Node::Mul: return "(" + print(*n.a) + "*" + print(*n.b) + ")";
    case Node::Pow: return "(" + print(*n.a) + ")^" + std::to_string(n.exponent);
    case Node::Neg: return "(-(" + print(*n.a) + "))";
  }
  return {};
}

mpq_class eval(const Node& n, const mpq_class& x, const mpq_class& e) {
  switch (n.kind) {
    case Node::X: return x;
    case Node::Eps: return e;
    case Node::Lit: return n.value;
    case Node::Add: return eval(*n.a, x, e) + eval(*n.b, x, e);
    case Node::Sub: return eval(*n.a, x, e) - eval(*n.b, x, e);
    case Node::Mul: return eval(*n.a, x, e) * eval(*n.b, x, e);
    case Node::Pow: {
      const mpq_class base = eval(*n.a, x, e);
      mpq_class r = 1;
      for (int i = 0; i < n.exponent; ++i) r *= base;
      return r;
    }
    case Node::Neg: return -eval(*n.a, x, e);
  }
  return 0;
}

}  // namespace

Outcome series_laws(int count, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  const auto fail = [&](int i, const char* law) {
    if (out.ok) out.detail = fmt::format("case {}: {}", i, law);
    out.ok = false;
  };
  for (int i = 0; i < count; ++i) {
    const int order = std::uniform_int_distribution<int>(0, 8)(rng);
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    const auto zero = TruncatedSeries::zero(order, CoefficientMode::Rational);
    ++out.cases;
    if (a + b != b + a) fail(i, "addition commutes");
    if ((a + b) + c != a + (b + c)) fail(i, "addition associates");
    if (a * b != b * a) fail(i, "multiplication commutes");
    if ((a * b) * c != a * (b * c)) fail(i, "multiplication associates");
    if (a * (b + c) != a * b + a * c) fail(i, "distributive law");
    if (a + zero != a || a - a != zero) fail(i, "additive identity and inverse");
    if (a * one(order) != a) fail(i, "multiplicative identity");
    if (a[0].is_zero()) {
      bool threw = false;
      try {
        invert(a);
      } catch (const Error& e) {
        threw = e.kind() == ErrorKind::ZeroConstantTerm;
      }
      if (!threw) fail(i, "zero constant term is not invertible");
    } else if (a * invert(a) != one(order)) {
      fail(i, "multiplicative inverse");
    }
    if (order >= 1 && differentiate(a * b) != differentiate(a) * b + a * differentiate(b))
      fail(i, "product rule");
  }
  return out;
}

Outcome parser_laws(int count, unsigned seed) {
  std::mt19937 rng(seed);
  Outcome out;
  const auto fail = [&](int i, const std::string& what) {
    if (out.ok) out.detail = fmt::format("case {}: {}", i, what);
    out.ok = false;
  };
  for (int i = 0; i < count; ++i) {
    const auto tree = random_tree(rng, 4);
    const std::string text = print(*tree);
    ++out.cases;
    try {
      const auto p = parse(text);
      const std::string canon = format(p);
      if (parse(canon) != p) fail(i, "round trip of " + text + " via " + canon);
      for (int k = 0; k < 3; ++k) {
        const mpq_class x = random_rational(rng), e = random_rational(rng);
        if (evaluate_at(p, x, e) != eval(*tree, x, e)) fail(i, "evaluation of " + text);
      }
    } catch (const std::exception& e) {
      fail(i, text + ": " + e.what());
    }
  }
  return out;
}

Outcome golden_files(const std::string& dir) {
  namespace fs = std::filesystem;
  Outcome out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".args") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::vector<std::string> args{"pertkit"};
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) args.push_back(line);
    auto expected_path = path;
    expected_path.replace_extension(".out");
    std::ifstream exp(expected_path, std::ios::binary);
    std::stringstream buf;
    buf << exp.rdbuf();
    ++out.cases;
    for (int pass = 0; pass < 2; ++pass) {
      std::ostringstream o, e;
      const int code = cli::run(args, o, e);
      if (code != 0 || o.str() != buf.str()) {
        if (out.ok) out.detail = path.filename().string() + " differs";
        out.ok = false;
      }
    }
  }
  if (files.empty()) {
    out.ok = false;
    out.detail = "no golden files in " + dir;
  }
  return out;
}

}  // namespace pert::checks
