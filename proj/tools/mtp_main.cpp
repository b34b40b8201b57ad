// mtp: exact arithmetic in metaplectic covers and Harish-Chandra
// c-function evaluation. Subcommands: rootsys, mgroup, cfun, cfactor,
// verify, table.

#include <cinttypes>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mtp/cfun.hpp"
#include "mtp/euclid.hpp"
#include "mtp/intertwine.hpp"
#include "mtp/quad.hpp"
#include "mtp/rootsys.hpp"
#include "mtp/torus.hpp"
#include "mtp/verify.hpp"

using json = nlohmann::json;
using mtp::Complex;

namespace {

// ---------------------------------------------------------------------------
// deterministic serialization: sorted keys (nlohmann's default object is a
// sorted map) and floats at 17 significant digits
// ---------------------------------------------------------------------------

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_json(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        dump_json(j[k], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += fmt_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string dump_record(const json& j) {
  std::string out;
  dump_json(j, out);
  out += '\n';
  return out;
}

json make_record(const std::string& command, json inputs, json results,
                 json diagnostics = json::array()) {
  json rec;
  rec["schema_version"] = 1;
  rec["command"] = command;
  rec["inputs"] = std::move(inputs);
  rec["results"] = std::move(results);
  rec["diagnostics"] = std::move(diagnostics);
  return rec;
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

double strict_stod(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

Complex parse_complex(std::string str) {
  std::erase(str, ' ');
  if (str.empty()) throw std::invalid_argument("empty complex literal");
  if (str.back() != 'i') return {strict_stod(str), 0.0};
  str.pop_back();
  int split = -1;
  for (std::size_t k = 1; k < str.size(); ++k)
    if ((str[k] == '+' || str[k] == '-') && str[k - 1] != 'e' && str[k - 1] != 'E')
      split = (int)k;
  auto imag_of = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return strict_stod(s);
  };
  if (split < 0) return {0.0, imag_of(str)};
  return {strict_stod(str.substr(0, split)), imag_of(str.substr(split))};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

std::vector<Complex> parse_param_vector(const std::string& s, int rank) {
  std::vector<Complex> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_complex(tok));
  if ((int)out.size() != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " comma-separated coordinates");
  return out;
}

mtp::WeylWord parse_word(const std::string& s, int rank) {
  mtp::WeylWord w;
  for (const auto& tok : split(s, ' ')) {
    if (tok.empty()) continue;
    for (const auto& t2 : split(tok, ',')) {
      if (t2.empty()) continue;
      int v = std::stoi(t2);
      if (v < 1 || v > rank)
        throw std::invalid_argument("word letter out of range: " + t2);
      w.letters.push_back(v - 1);
    }
  }
  return w;
}

struct GridAxis {
  std::vector<double> values;
};

GridAxis parse_grid_axis(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 3) throw std::invalid_argument("grid spec must be start:stop:count");
  double start = strict_stod(parts[0]);
  double stop = strict_stod(parts[1]);
  long count = std::stol(parts[2]);
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");
  if (count > 1 && stop < start) throw std::invalid_argument("empty grid range");
  if (count > 1000000) throw std::invalid_argument("grid too large");
  GridAxis axis;
  for (long k = 0; k < count; ++k)
    axis.values.push_back(count == 1 ? start : start + (stop - start) * k / (count - 1));
  return axis;
}

json complex_json(Complex v) {
  json j;
  j["re"] = v.real();
  j["im"] = v.imag();
  return j;
}

json cvalue_json(const mtp::CValue& v) {
  json j;
  switch (v.kind) {
    case mtp::CValue::Kind::Finite:
      j["kind"] = "finite";
      j["re"] = v.value.real();
      j["im"] = v.value.imag();
      break;
    case mtp::CValue::Kind::Pole:
      j["kind"] = "pole";
      break;
    case mtp::CValue::Kind::Indeterminate:
      j["kind"] = "indeterminate";
      break;
  }
  return j;
}

std::string cvalue_text(const mtp::CValue& v) {
  switch (v.kind) {
    case mtp::CValue::Kind::Pole: return "pole";
    case mtp::CValue::Kind::Indeterminate: return "indeterminate";
    default: break;
  }
  return fmt_double(v.value.real()) + " + " + fmt_double(v.value.imag()) + "i";
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_rootsys(const std::string& type, bool as_json) {
  mtp::RootSystem rs(mtp::RootSystemSpec::parse(type));
  json roots = json::array();
  for (const auto& r : rs.roots()) {
    json jr;
    jr["coords"] = r.coords;
    jr["long"] = rs.is_long(r);
    jr["metaplectic"] = rs.is_metaplectic(r);
    roots.push_back(std::move(jr));
  }
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(std::move(row));
  }
  json results;
  json diagnostics = json::array();
  results["type"] = rs.spec().name();
  results["rank"] = rs.rank();
  results["n_phi"] = rs.n_phi();
  results["num_roots"] = rs.roots().size();
  results["num_positive"] = rs.num_positive();
  results["cartan_matrix"] = cartan;
  results["roots"] = roots;
  std::string worder = "overflow";
  try {
    std::uint64_t w = mtp::weyl_order(rs.spec());
    results["weyl_order"] = w;
    worder = std::to_string(w);
  } catch (const std::overflow_error&) {
    diagnostics.push_back("weyl_order omitted: exceeds 64 bits");
  }
  int meta = 0;
  for (const auto& r : rs.roots())
    if (rs.is_metaplectic(r)) ++meta;
  results["num_metaplectic"] = meta;

  if (as_json) {
    std::cout << dump_record(make_record("rootsys", json{{"type", type}}, results, diagnostics));
    return 0;
  }
  std::cout << "root system " << rs.spec().name() << ": " << rs.roots().size() << " roots ("
            << rs.num_positive() << " positive), n_phi = " << rs.n_phi()
            << ", |W| = " << worder << "\n";
  std::cout << "metaplectic roots: " << meta << " of " << rs.roots().size() << "\n";
  std::cout << "cartan matrix:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) std::cout << (j ? " " : "  ") << rs.cartan(i, j);
    std::cout << "\n";
  }
  std::cout << "positive roots (simple-root coordinates):\n";
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& r = rs.roots()[k];
    std::cout << "  [";
    for (std::size_t j = 0; j < r.coords.size(); ++j)
      std::cout << (j ? "," : "") << r.coords[j];
    std::cout << "]" << (rs.is_long(r) ? " long" : " short")
              << (rs.is_metaplectic(r) ? " metaplectic" : "") << "\n";
  }
  return 0;
}

int cmd_mgroup(const std::string& type, bool as_json) {
  mtp::RootSystem rs(mtp::RootSystemSpec::parse(type));
  mtp::MGroup m(rs);
  json results;
  json diagnostics = json::array();
  results["type"] = rs.spec().name();
  results["order"] = m.order();
  results["center_order"] = m.center_order();
  results["abelian"] = m.is_abelian();
  results["genuine_character_count"] = m.center_order() / 2;
  results["pseudospherical_dim"] = mtp::pseudospherical_dim(m);

  json chars = json::array();
  bool have_chars = true;
  try {
    auto list = mtp::genuine_central_characters(m);
    static const char* unit_names[4] = {"1", "i", "-1", "-i"};
    int ps_count = 0;
    for (std::size_t k = 0; k < list.size(); ++k) {
      json jc;
      jc["index"] = k;
      json values;
      for (int i = 0; i < rs.rank(); ++i)
        if (m.is_central(m.generator(i)))
          values["m" + std::to_string(i + 1)] = unit_names[list[k].exponent(m.generator(i)) & 3];
      jc["values_on_central_generators"] = values;
      bool ps = mtp::is_pseudospherical(rs, m, list[k]);
      jc["pseudospherical"] = ps;
      if (ps) ++ps_count;
      chars.push_back(std::move(jc));
    }
    results["pseudospherical_character_count"] = ps_count;
  } catch (const std::runtime_error& e) {
    have_chars = false;
    diagnostics.push_back(std::string("character table suppressed: ") + e.what());
  }
  if (have_chars) results["genuine_characters"] = chars;

  if (as_json) {
    std::cout << dump_record(make_record("mgroup", json{{"type", type}}, results, diagnostics));
    return 0;
  }
  std::cout << "M-group of " << rs.spec().name() << ": |M| = " << m.order()
            << ", |Z(M)| = " << m.center_order() << (m.is_abelian() ? " (abelian)" : "")
            << "\n";
  std::cout << "genuine characters: " << m.center_order() / 2
            << ", pseudospherical dimension: " << mtp::pseudospherical_dim(m) << "\n";
  if (have_chars) {
    for (std::size_t k = 0; k < chars.size(); ++k)
      std::cout << "  chi_" << k << ": pseudospherical = "
                << (chars[k]["pseudospherical"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    std::cout << "  (character table suppressed: center too large)\n";
  }
  return 0;
}

int cmd_cfun(int n, const std::string& s_str, bool oracle, bool as_json) {
  Complex s = parse_complex(s_str);
  mtp::CValue closed = mtp::c_n_over_2(n, s);
  json results;
  results["closed_form"] = cvalue_json(closed);
  json diagnostics = json::array();
  double rel = 0;
  Complex quad{};
  bool have_quad = false;
  if (oracle) {
    if (s.real() > 0) {
      quad = mtp::quad_oracle(n, s);
      have_quad = true;
      if (closed.is_finite()) {
        double scale = std::max({std::abs(closed.value), std::abs(quad), 1e-300});
        rel = std::abs(closed.value - quad) / scale;
      }
      results["quadrature"] = complex_json(quad);
      results["rel_diff"] = rel;
    } else {
      diagnostics.push_back("oracle skipped: integral requires Re(s) > 0");
    }
  }
  if (as_json) {
    json inputs;
    inputs["n"] = n;
    inputs["s"] = complex_json(s);
    inputs["oracle"] = oracle;
    std::cout << dump_record(make_record("cfun", inputs, results, diagnostics));
    return 0;
  }
  std::cout << "c_{" << n << "/2}(" << fmt_double(s.real()) << (s.imag() < 0 ? "" : "+")
            << fmt_double(s.imag()) << "i) = " << cvalue_text(closed) << "\n";
  if (have_quad) {
    std::cout << "quadrature oracle = " << fmt_double(quad.real()) << " + "
              << fmt_double(quad.imag()) << "i  (rel diff " << fmt_double(rel) << ")\n";
  }
  return 0;
}

int cmd_cfactor(const std::string& type, const std::string& word_str,
                const std::string& s_str, bool all_words, bool as_json) {
  mtp::RootSystem rs(mtp::RootSystemSpec::parse(type));
  mtp::WeylWord word = parse_word(word_str, rs.rank());
  mtp::SpectralParam s{parse_param_vector(s_str, rs.rank())};
  mtp::CFactorResult res = mtp::c_factor(rs, word, s);

  json results;
  results["value"] = cvalue_json(res.value);
  json trace = json::array();
  for (const auto& e : res.trace) {
    json jt;
    jt["letter"] = e.letter + 1;
    jt["argument"] = complex_json(e.argument);
    jt["factor"] = cvalue_json(e.factor);
    trace.push_back(std::move(jt));
  }
  results["trace"] = trace;

  double max_dev = 0;
  json words_json = json::array();
  if (all_words) {
    auto w = mtp::weyl_element(rs, word);
    auto words = mtp::all_reduced_words(rs, w);
    std::vector<Complex> vals;
    for (const auto& rw : words) {
      auto v = mtp::c_factor(rs, rw, s);
      json jw;
      json letters = json::array();
      for (int ltr : rw.letters) letters.push_back(ltr + 1);
      jw["word"] = letters;
      jw["value"] = cvalue_json(v.value);
      words_json.push_back(std::move(jw));
      if (v.value.is_finite()) vals.push_back(v.value.value);
    }
    for (std::size_t a = 0; a < vals.size(); ++a)
      for (std::size_t b = a + 1; b < vals.size(); ++b) {
        double scale = std::max({std::abs(vals[a]), std::abs(vals[b]), 1e-300});
        max_dev = std::max(max_dev, std::abs(vals[a] - vals[b]) / scale);
      }
    results["all_words"] = words_json;
    results["max_pairwise_rel_deviation"] = max_dev;
  }

  if (as_json) {
    json inputs;
    inputs["type"] = type;
    inputs["word"] = word_str;
    inputs["s"] = s_str;
    inputs["all_words"] = all_words;
    std::cout << dump_record(make_record("cfactor", inputs, results));
    return 0;
  }
  std::cout << "c(w,s) over " << type << ", word [" << word_str << "]:\n";
  for (const auto& e : res.trace)
    std::cout << "  letter " << e.letter + 1 << ": argument " << fmt_double(e.argument.real())
              << (e.argument.imag() < 0 ? "" : "+") << fmt_double(e.argument.imag())
              << "i -> " << cvalue_text(e.factor) << "\n";
  std::cout << "value = " << cvalue_text(res.value) << "\n";
  if (all_words)
    std::cout << "reduced words: " << words_json.size() << ", max pairwise rel deviation "
              << fmt_double(max_dev) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
  auto results = mtp::verify::run_suite(suite, seed);
  bool ok = mtp::verify::all_passed(results);
  if (as_json) {
    json checks = json::array();
    for (const auto& r : results) {
      json jc;
      jc["name"] = r.name;
      jc["pass"] = r.pass;
      jc["measured"] = r.measured;
      jc["detail"] = r.detail;
      checks.push_back(std::move(jc));
    }
    json res;
    res["checks"] = checks;
    res["all_passed"] = ok;
    json inputs;
    inputs["suite"] = suite;
    inputs["seed"] = seed;
    std::cout << dump_record(make_record("verify", inputs, res));
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                << (r.detail.empty() ? "" : "  [" + r.detail + "]")
                << "  (measured " << fmt_double(r.measured) << ")\n";
    std::cout << (ok ? "all checks passed" : "SUITE FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_table(const std::string& type, const std::string& word_str, const std::string& re_str,
              const std::string& im_str, const std::string& format) {
  mtp::RootSystem rs(mtp::RootSystemSpec::parse(type));
  int l = rs.rank();

  mtp::WeylWord word;
  if (word_str.empty()) {
    // default: the longest element
    auto elements = mtp::weyl_enumerate(rs);
    word = elements.back().canonical_word;
  } else {
    word = parse_word(word_str, l);
  }

  auto parse_axes = (/* per coordinate, or one spec for all */
                     [&](const std::string& s, const std::string& fallback) {
                       std::vector<GridAxis> axes;
                       if (s.empty()) {
                         for (int i = 0; i < l; ++i) axes.push_back(parse_grid_axis(fallback));
                         return axes;
                       }
                       auto specs = split(s, ',');
                       if ((int)specs.size() == 1)
                         for (int i = 0; i < l; ++i) axes.push_back(parse_grid_axis(specs[0]));
                       else if ((int)specs.size() == l)
                         for (const auto& sp : specs) axes.push_back(parse_grid_axis(sp));
                       else
                         throw std::invalid_argument("expected 1 or rank grid specs");
                       return axes;
                     });
  std::vector<GridAxis> re_axes = parse_axes(re_str, "1:1:1");
  std::vector<GridAxis> im_axes = parse_axes(im_str, "0:0:1");

  // odometer over coordinates; per coordinate the values are re-major
  std::vector<std::size_t> sizes(l);
  std::size_t total = 1;
  for (int i = 0; i < l; ++i) {
    sizes[i] = re_axes[i].values.size() * im_axes[i].values.size();
    total *= sizes[i];
  }
  if (total > 2000000) throw std::invalid_argument("grid too large");

  bool as_json = format == "json";
  json rows_json = json::array();
  std::string csv;
  if (!as_json) {
    for (int i = 0; i < l; ++i)
      csv += "s" + std::to_string(i + 1) + "_re,s" + std::to_string(i + 1) + "_im,";
    csv += "c_re,c_im,pole\n";
  }

  std::vector<std::size_t> idx(l, 0);
  for (std::size_t row = 0; row < total; ++row) {
    mtp::SpectralParam s;
    s.coords.resize(l);
    for (int i = 0; i < l; ++i) {
      std::size_t ni = im_axes[i].values.size();
      s.coords[i] = Complex(re_axes[i].values[idx[i] / ni], im_axes[i].values[idx[i] % ni]);
    }
    auto v = mtp::c_factor(rs, word, s);
    int flag = v.value.is_finite() ? 0 : (v.value.is_pole() ? 1 : 2);
    if (as_json) {
      json jr;
      json coords = json::array();
      for (int i = 0; i < l; ++i) coords.push_back(complex_json(s.coords[i]));
      jr["s"] = coords;
      jr["value"] = cvalue_json(v.value);
      rows_json.push_back(std::move(jr));
    } else {
      for (int i = 0; i < l; ++i)
        csv += fmt_double(s.coords[i].real()) + "," + fmt_double(s.coords[i].imag()) + ",";
      if (v.value.is_finite())
        csv += fmt_double(v.value.value.real()) + "," + fmt_double(v.value.value.imag());
      else
        csv += "nan,nan";
      csv += "," + std::to_string(flag) + "\n";
    }
    // advance odometer, last coordinate fastest
    for (int i = l - 1; i >= 0; --i) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
  }

  if (as_json) {
    json inputs;
    inputs["type"] = type;
    inputs["word"] = word_str;
    inputs["re"] = re_str;
    inputs["im"] = im_str;
    json results;
    json letters = json::array();
    for (int ltr : word.letters) letters.push_back(ltr + 1);
    results["word"] = letters;
    results["rows"] = rows_json;
    std::cout << dump_record(make_record("table", inputs, results));
  } else {
    std::cout << csv;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"metaplectic cover arithmetic and c-function tables"};
  app.require_subcommand(1);

  std::string type, word, s_str, re_str, im_str, format = "csv", suite;
  int n = 0;
  bool oracle = false, all_words = false, as_json = false;
  std::uint64_t seed = mtp::verify::kDefaultSeed;

  auto* sc_rootsys = app.add_subcommand("rootsys", "inspect a root system (e.g. B2)");
  sc_rootsys->add_option("type", type, "family+rank, e.g. A2, G2")->required();
  sc_rootsys->add_flag("--json", as_json, "emit a JSON record");

  auto* sc_mgroup = app.add_subcommand("mgroup", "structure of the finite group M");
  sc_mgroup->add_option("type", type)->required();
  sc_mgroup->add_flag("--json", as_json);

  auto* sc_cfun = app.add_subcommand("cfun", "evaluate c_{n/2}(s)");
  sc_cfun->add_option("--n", n, "K-type index (numerator of n/2)")->required();
  sc_cfun->add_option("--s", s_str, "complex parameter, e.g. 1.5 or 2+0.5i")->required();
  sc_cfun->add_flag("--oracle", oracle, "also run the quadrature oracle");
  sc_cfun->add_flag("--json", as_json);

  auto* sc_cfactor = app.add_subcommand("cfactor", "c(w,s) over a reduced word");
  sc_cfactor->add_option("--type", type)->required();
  sc_cfactor->add_option("--word", word, "1-based simple reflections, e.g. \"1 2 1 2\"")
      ->required();
  sc_cfactor->add_option("--s", s_str, "comma-separated complex coordinates")->required();
  sc_cfactor->add_flag("--all-words", all_words, "evaluate every reduced word");
  sc_cfactor->add_flag("--json", as_json);

  auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
  sc_verify->add_option("suite", suite, "rootsys|torus|kubota|cfun|intertwine|all")
      ->required();
  sc_verify->add_option("--seed", seed, "seed for randomized checks");
  sc_verify->add_flag("--json", as_json);

  auto* sc_table = app.add_subcommand("table", "CSV/JSON table of c(w,s) over a grid");
  sc_table->add_option("--type", type)->required();
  sc_table->add_option("--word", word, "reduced word (default: longest element)");
  sc_table->add_option("--re", re_str, "per-coordinate grid start:stop:count[,...]");
  sc_table->add_option("--im", im_str, "per-coordinate imaginary grid");
  sc_table->add_option("--format", format, "csv (default) or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_rootsys->parsed()) return cmd_rootsys(type, as_json);
    if (sc_mgroup->parsed()) return cmd_mgroup(type, as_json);
    if (sc_cfun->parsed()) return cmd_cfun(n, s_str, oracle, as_json);
    if (sc_cfactor->parsed()) return cmd_cfactor(type, word, s_str, all_words, as_json);
    if (sc_verify->parsed()) return cmd_verify(suite, seed, as_json);
    if (sc_table->parsed()) {
      if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
      return cmd_table(type, word, re_str, im_str, format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
