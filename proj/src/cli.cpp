#include "trinom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "trinom/oracle.hpp"
#include "trinom/report_json.hpp"
#include "trinom/sign_eval.hpp"
#include "trinom/solver.hpp"

namespace trinom::cli {

namespace {

enum class Format { json, text, csv };

struct Options {
  std::string literal;
  std::string point;
  std::string batch;
  std::int64_t bits = 64;
  std::int64_t cap_bits = 0;  // 0: environment or default
  Format format = Format::json;
  bool positive_only = false;
  std::uint64_t seed = 1;
};

struct Outcome {
  int status = ok;
  std::string text;
};

std::string csv_bool(bool b) { return b ? "true" : "false"; }

PrecisionRequest precision(const Options& o) {
  PrecisionRequest req;
  req.bits = o.bits;
  if (o.cap_bits > 0) {
    req.cap_bits = o.cap_bits;
  } else if (const char* env = std::getenv(kCapEnv)) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw DomainError(std::string(kCapEnv) + " is not a positive integer");
    req.cap_bits = v;
  }
  req.cap_bits = std::max(req.cap_bits, req.bits);
  return req;
}

RationalPoint parse_point(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw DomainError("malformed point \"" + s + "\" (expected u/v)");
  }
  return RationalPoint::of(q);
}

std::string solve_cmd(const Trinomial& f, const Options& o, const PrecisionRequest& req) {
  const SolveReport r = o.positive_only ? solve_positive(f, req) : solve_real(f, req);
  std::ostringstream s;
  switch (o.format) {
    case Format::json: {
      Json j{{"input", format_trinomial(f)}};
      j.update(to_json(r));
      s << j.dump();
      break;
    }
    case Format::text:
      s << format_trinomial(f) << ": m = " << r.m << (r.ill_conditioned ? " (ill-conditioned)" : "");
      for (const std::string& msg : r.messages) s << "\n  " << msg;
      for (const SolvedRoot& z : r.roots) {
        char bracket[64];
        std::snprintf(bracket, sizeof bracket, "[%.17g, %.17g]", z.bracket.lo().to_double(), z.bracket.hi().to_double());
        s << "\n  z = " << z.value.get_str() << "  in " << bracket << (z.degenerate ? "  degenerate" : "")
          << (z.certified ? "" : "  uncertified");
      }
      break;
    case Format::csv:
      for (std::size_t i = 0; i < r.roots.size(); ++i) {
        const SolvedRoot& z = r.roots[i];
        if (i) s << '\n';
        s << '"' << format_trinomial(f) << "\"," << i << ',' << z.value.get_num().get_str() << ','
          << z.value.get_den().get_str() << ',' << csv_bool(z.degenerate) << ',' << csv_bool(z.certified) << ','
          << z.bracket.lo().to_rational().get_str() << ',' << z.bracket.hi().to_rational().get_str();
      }
      break;
  }
  return s.str();
}

std::string count_cmd(const Trinomial& f, const Options& o, const PrecisionRequest& req) {
  const RootTally t = count_real_roots(f, req);
  std::ostringstream s;
  switch (o.format) {
    case Format::json: {
      Json j{{"input", format_trinomial(f)}};
      j.update(to_json(t));
      s << j.dump();
      break;
    }
    case Format::text:
      s << format_trinomial(f) << ": " << t.positive << " positive, " << t.negative << " negative, " << t.total()
        << " total, " << t.degenerate << " degenerate";
      break;
    case Format::csv:
      s << '"' << format_trinomial(f) << "\"," << t.positive << ',' << t.negative << ',' << t.total() << ','
        << t.degenerate;
      break;
  }
  return s.str();
}

std::string sign_cmd(const Trinomial& f, const Options& o, const PrecisionRequest& req) {
  if (o.point.empty()) throw DomainError("sign-at needs --point u/v");
  const RationalPoint r = parse_point(o.point);
  const SignResult res = sign_at(f, r, req);
  std::ostringstream s;
  switch (o.format) {
    case Format::json: {
      Json j{{"input", format_trinomial(f)}, {"point", r.value().get_str()}};
      j.update(to_json(res));
      s << j.dump();
      break;
    }
    case Format::text:
      s << "sign f(" << r.value().get_str() << ") = " << to_int(res.sign) << " (" << to_string(res.provenance) << ", "
        << res.bits_used << " bits)";
      break;
    case Format::csv:
      s << '"' << format_trinomial(f) << "\"," << r.value().get_str() << ',' << to_int(res.sign) << ','
        << to_string(res.provenance) << ',' << res.bits_used << ',' << csv_bool(res.fallback);
      break;
  }
  return s.str();
}

std::string classify_cmd(const Trinomial& f, const Options& o, const PrecisionRequest& req) {
  const bool ill = is_ill_conditioned(f, req);
  const std::int64_t delta = std::gcd(f.a2, f.a3);
  const Trinomial reduced(f.c1, f.c2, f.c3, f.a2 / delta, f.a3 / delta);
  const SignResult disc = discriminant_sign(reduced, req);
  std::ostringstream s;
  switch (o.format) {
    case Format::json:
      s << Json{{"input", format_trinomial(f)},
                {"ill_conditioned", ill},
                {"discriminant_sign", std::to_string(to_int(disc.sign))},
                {"provenance", to_string(disc.provenance)},
                {"delta", std::to_string(delta)}}
               .dump();
      break;
    case Format::text:
      s << format_trinomial(f) << ": " << (ill ? "ill-conditioned" : "well-conditioned")
        << ", sign(discriminant) = " << to_int(disc.sign);
      break;
    case Format::csv:
      s << '"' << format_trinomial(f) << "\"," << csv_bool(ill) << ',' << to_int(disc.sign) << ','
        << to_string(disc.provenance);
      break;
  }
  return s.str();
}

std::string csv_header(const std::string& cmd) {
  if (cmd == "solve") return "input,index,num,den,degenerate,certified,bracket_lo,bracket_hi";
  if (cmd == "count") return "input,positive,negative,total,degenerate";
  if (cmd == "sign-at") return "input,point,sign,provenance,bits_used,fallback";
  return "input,ill_conditioned,discriminant_sign,provenance";
}

Outcome guarded(const std::function<std::string()>& body) {
  try {
    return {ok, body()};
  } catch (const ParseError& e) {
    return {input_error, e.what()};
  } catch (const DomainError& e) {
    return {input_error, e.what()};
  } catch (const UndecidedError& e) {
    return {undecided, std::string("undecided: ") + e.what()};
  } catch (const ResourceError& e) {
    return {undecided, std::string("undecided: ") + e.what()};
  } catch (const CertificationError& e) {
    return {internal_error, std::string("internal error: ") + e.what()};
  }
}

int per_trinomial(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> inputs;
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in) {
      err << "cannot read batch file " << o.batch << '\n';
      return input_error;
    }
    for (std::string line; std::getline(in, line);) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
    }
  } else {
    if (o.literal.empty()) {
      err << cmd << ": missing trinomial literal\n";
      return input_error;
    }
    inputs.push_back(o.literal);
  }

  if (o.format == Format::csv) out << csv_header(cmd) << '\n';
  int status = ok;
  for (const std::string& text : inputs) {
    const Outcome r = guarded([&] {
      const PrecisionRequest req = precision(o);
      const Trinomial f = parse_trinomial(text);
      if (cmd == "solve") return solve_cmd(f, o, req);
      if (cmd == "count") return count_cmd(f, o, req);
      if (cmd == "sign-at") return sign_cmd(f, o, req);
      return classify_cmd(f, o, req);
    });
    if (r.status == ok) {
      if (!r.text.empty()) out << r.text << '\n';
    } else if (o.batch.empty() || o.format != Format::json) {
      err << text << ": " << r.text << '\n';
    } else {
      out << Json{{"input", text}, {"error", r.text}}.dump() << '\n';
    }
    status = std::max(status, r.status);
  }
  return status;
}

int experiment_cmd(const Options& o, const std::vector<std::string>& shapes, const std::vector<std::int64_t>& heights,
                   std::ostream& out, std::ostream& err) {
  std::vector<oracle::FractionCell> cells;
  for (const std::string& shape : shapes) {
    const auto colon = shape.find(':');
    std::int64_t a2 = 0, a3 = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument(shape);
      a2 = std::stoll(shape.substr(0, colon));
      a3 = std::stoll(shape.substr(colon + 1));
    } catch (const std::exception&) {
      err << "malformed exponent pair \"" << shape << "\" (expected a2:a3)\n";
      return input_error;
    }
    if (a2 < 1 || a3 <= a2) {
      err << "exponent pair \"" << shape << "\" needs 1 <= a2 < a3\n";
      return input_error;
    }
    for (std::int64_t h : heights) {
      if (h < 1) {
        err << "height must be positive\n";
        return input_error;
      }
      cells.push_back(oracle::fraction_experiment(a2, a3, h));
    }
  }
  if (o.format == Format::json) {
    Json rows = Json::array();
    for (const auto& c : cells) {
      std::ostringstream bound;
      bound.precision(17);
      bound << c.bound;
      rows.push_back({{"a2", std::to_string(c.a2)}, {"a3", std::to_string(c.a3)}, {"H", std::to_string(c.H)},
                      {"ill_count", std::to_string(c.ill_count)}, {"total", std::to_string(c.total)},
                      {"bound", bound.str()}, {"ok", c.ok()}});
    }
    out << rows.dump() << '\n';
  } else {
    out << oracle::fraction_csv(cells);
  }
  return ok;
}

int bench_cmd(const Options& o, const std::vector<int>& exponents, int samples, long height, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coef(-height, height);
  const PrecisionRequest req = precision(o);
  Json rows = Json::array();
  for (int e : exponents) {
    const std::int64_t a3 = std::int64_t{1} << e;
    std::vector<double> t;
    for (int i = 0; i < samples; ++i) {
      long c[3];
      for (long& v : c) do v = coef(rng); while (v == 0);
      const std::int64_t a2 = std::uniform_int_distribution<std::int64_t>(1, a3 - 1)(rng);
      const Trinomial f(c[0], c[1], c[2], a2, a3);
      const auto t0 = std::chrono::steady_clock::now();
      solve_real(f, req);
      t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(t.begin(), t.end());
    rows.push_back({{"a3", "2^" + std::to_string(e)}, {"samples", std::to_string(samples)},
                    {"median_seconds", t[t.size() / 2]}, {"max_seconds", t.back()}});
  }
  out << rows.dump() << '\n';
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified real roots and signs of trinomials c1 + c2 x^a2 + c3 x^a3"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool literal) {
    if (literal) {
      sub->add_option("trinomial", o.literal, "literal c1,c2,c3;a2,a3");
      sub->add_option("--batch", o.batch, "file with one literal per line");
    }
    sub->add_option("--bits", o.bits, "working precision in bits")->check(CLI::Range(std::int64_t{8}, std::int64_t{1} << 24));
    sub->add_option("--cap-bits", o.cap_bits, std::string("precision cap; overrides ") + kCapEnv)
        ->check(CLI::Range(std::int64_t{8}, std::int64_t{1} << 30));
    sub->add_option("--format", o.format, "json, text or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--seed", o.seed, "random seed");
  };

  CLI::App* solve = app.add_subcommand("solve", "certified approximate real roots");
  common(solve, true);
  solve->add_flag("--positive", o.positive_only, "positive roots only");
  CLI::App* count = app.add_subcommand("count", "number of real roots");
  common(count, true);
  CLI::App* sign = app.add_subcommand("sign-at", "sign of f at a rational point");
  common(sign, true);
  sign->add_option("--point", o.point, "u/v");
  CLI::App* classify = app.add_subcommand("classify", "conditioning and discriminant sign");
  common(classify, true);

  std::vector<std::string> shapes{"1:2", "1:3", "2:3"};
  std::vector<std::int64_t> heights{5, 10, 25, 50};
  CLI::App* experiment = app.add_subcommand("experiment", "ill-conditioned fraction over coefficient boxes");
  common(experiment, false);
  experiment->add_option("--shape", shapes, "exponent pairs a2:a3");
  experiment->add_option("--height", heights, "coefficient bounds H");

  std::vector<int> exponents{10, 20, 30, 40};
  int samples = 25;
  long height = 1000000;
  CLI::App* bench = app.add_subcommand("bench", "median solve time per degree (timings vary run to run)");
  common(bench, false);
  bench->add_option("--exponent", exponents, "log2 of a3")->check(CLI::Range(2, 62));
  bench->add_option("--samples", samples)->check(CLI::Range(1, 100000));
  bench->add_option("--height", height)->check(CLI::Range(1L, (1L << 62)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }

  try {
    if (experiment->parsed()) {
      if (o.format == Format::text) o.format = Format::csv;
      return experiment_cmd(o, shapes, heights, out, err);
    }
    if (bench->parsed()) return bench_cmd(o, exponents, samples, height, out);
    const std::string cmd = app.get_subcommands().front()->get_name();
    return per_trinomial(cmd, o, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return input_error;
  }
}

}  // namespace trinom::cli
