// Command-line front end: enumerate the triangle and poset families, convert
// objects across the bijections, run verification suites, and render
// triangles and pyramids as ASCII.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "finetti/asm_bridge.hpp"
#include "finetti/catalan.hpp"
#include "finetti/definetti.hpp"
#include "finetti/errors.hpp"
#include "finetti/json_io.hpp"
#include "finetti/numbers.hpp"
#include "finetti/pyramid.hpp"

namespace {

using namespace finetti;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidArgument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct FamilySpec {
  int guard;  // largest n accepted without --force
};

const std::map<std::string, FamilySpec> kEnumFamilies = {
    {"kagog", {6}},     {"magog", {6}},        {"omagog", {6}}, {"gog", {6}},
    {"ogog", {6}},      {"asm", {7}},          {"fn21", {7}},   {"le-fn2", {6}},
    {"definetti-bn", {5}}, {"monotone", {10}}, {"coin", {10}},
};

void check_guard(const std::string& family, int n, int guard, bool force) {
  if (n <= guard) return;
  if (!force)
    throw InfeasibleError("family " + family + " is guarded at n <= " + std::to_string(guard) +
                          "; pass --force to override");
  std::cerr << "warning: " << family << " at n = " << n
            << " exceeds the documented guard; this may take a while\n";
}

std::string order_ascii(const std::vector<SubsetElement>& order) {
  std::string s;
  for (const auto& e : order) {
    if (!s.empty()) s += " < ";
    s += e.label();
  }
  s += '\n';
  return s;
}

std::string poset_ascii(const Poset& p) {
  std::string s = "elements:";
  for (const auto& e : p.elements) s += ' ' + e.label();
  s += "\ncovers:";
  for (auto [a, b] : hasse_covers(p).covers)
    s += ' ' + p.elements[a].label() + '<' + p.elements[b].label();
  s += '\n';
  return s;
}

int cmd_enumerate(const std::string& family, int n, bool count_only, const std::string& format,
                  const std::string& out_path, const std::string& mode, bool force) {
  auto it = kEnumFamilies.find(family);
  if (it == kEnumFamilies.end()) {
    std::cerr << "error: unknown family: " << family << "\n";
    return kExitUsage;
  }
  check_guard(family, n, it->second.guard, force);
  Output out(out_path);
  std::ostream& os = out.stream();
  const bool ascii = format == "ascii";
  unsigned long long count = 0;

  auto emit_triangle = [&](const Triangle& t) {
    if (count_only)
      ++count;
    else if (ascii)
      os << render_flat(t) << "\n";
    else
      os << triangle_to_json(t).dump() << "\n";
    return true;
  };

  if (family == "kagog" || family == "magog" || family == "omagog" || family == "gog" ||
      family == "ogog") {
    enumerate_family(family_from_name(family), n, emit_triangle);
  } else if (family == "asm") {
    enumerate_asm(
        n,
        [&](const AsmMatrix& a) {
          if (count_only)
            ++count;
          else if (ascii)
            os << render_asm(a) << "\n";
          else
            os << asm_to_json(a).dump() << "\n";
          return true;
        },
        true);
  } else if (family == "fn21") {
    const Fn21Mode m = mode == "direct" ? Fn21Mode::direct : Fn21Mode::via_kagog;
    enumerate_fn21(
        n, m,
        [&](const DeFinettiPoset& p) {
          if (count_only)
            ++count;
          else if (ascii)
            os << poset_ascii(p.base) << "\n";
          else
            os << poset_to_json(p).dump() << "\n";
          return true;
        },
        force);
  } else if (family == "le-fn2") {
    const DeFinettiPoset f = build_fn2(n);
    if (count_only) {
      os << linear_extension_count(f.base) << "\n";
      return kExitOk;
    }
    for_each_linear_extension(f.base, [&](const std::vector<int>& seq) {
      std::vector<SubsetElement> order;
      for (int idx : seq) order.push_back(f.base.elements[idx]);
      if (ascii)
        os << order_ascii(order);
      else
        os << order_to_json(n, order).dump() << "\n";
      return true;
    });
    return kExitOk;
  } else if (family == "definetti-bn") {
    enumerate_definetti_total_orders(
        n,
        [&](const std::vector<SubsetElement>& order) {
          if (count_only)
            ++count;
          else if (ascii)
            os << order_ascii(order);
          else
            os << order_to_json(n, order).dump() << "\n";
          return true;
        },
        force);
  } else if (family == "monotone") {
    enumerate_monotone(n, [&](const MonotoneSequence& s) {
      if (count_only)
        ++count;
      else if (ascii) {
        for (size_t i = 0; i < s.values.size(); ++i) os << (i ? " " : "") << s.values[i];
        os << "\n";
      } else
        os << sequence_to_json(s).dump() << "\n";
      return true;
    });
  } else if (family == "coin") {
    enumerate_coin(n, [&](const CoinPyramid& c) {
      if (count_only)
        ++count;
      else if (ascii) {
        for (const auto& row : c.rows) {
          for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
          os << "\n";
        }
        os << "\n";
      } else
        os << coin_to_json(c).dump() << "\n";
      return true;
    });
  }
  if (count_only) os << count << "\n";
  return kExitOk;
}

int cmd_count(const std::string& family, int n, bool force) {
  if (family == "ballot") {
    std::cout << ballot_number(n) << "\n";
    return kExitOk;
  }
  if (family == "asm-formula") {
    std::cout << asm_count_formula(n) << "\n";
    return kExitOk;
  }
  if (family == "catalan") {
    std::cout << catalan_number(n) << "\n";
    return kExitOk;
  }
  return cmd_enumerate(family, n, true, "json", "", "via-kagog", force);
}

// Conversion edges. Composite hops (magog<->kagog) route through the zeroed
// family.
int cmd_convert(const std::string& from, const std::string& to, const std::string& in_path,
                const std::string& out_path) {
  const Json j = Json::parse(read_input(in_path));
  Output out(out_path);
  std::ostream& os = out.stream();
  auto emit = [&](const Json& v) { os << v.dump() << "\n"; };

  const std::set<std::string> triangle_names = {"kagog", "magog", "omagog", "gog", "ogog"};

  if (triangle_names.count(from)) {
    Triangle t = triangle_from_json(j);
    if (family_from_name(from) != t.family)
      throw ValidationError("input triangle family is " + std::string(family_name(t.family)) +
                            ", not " + from);
    if (to == "pyramid") {
      emit(pyramid_to_json(to_pyramid(t)));
      return kExitOk;
    }
    if (from == "magog" && to == "omagog") return emit(triangle_to_json(magog_to_omagog(t))), kExitOk;
    if (from == "magog" && to == "kagog")
      return emit(triangle_to_json(psi_triangle(magog_to_omagog(t)))), kExitOk;
    if (from == "omagog" && to == "magog") return emit(triangle_to_json(omagog_to_magog(t))), kExitOk;
    if (from == "omagog" && to == "kagog") return emit(triangle_to_json(psi_triangle(t))), kExitOk;
    if (from == "omagog" && to == "monotone") return emit(sequence_to_json(rho_inverse(t))), kExitOk;
    if (from == "kagog" && to == "omagog")
      return emit(triangle_to_json(psi_inverse_triangle(t))), kExitOk;
    if (from == "kagog" && to == "magog")
      return emit(triangle_to_json(omagog_to_magog(psi_inverse_triangle(t)))), kExitOk;
    if (from == "kagog" && to == "fn21") return emit(poset_to_json(kagog_to_refinement(t))), kExitOk;
    if (from == "kagog" && to == "coin") return emit(coin_to_json(tau_inverse(t))), kExitOk;
    if (from == "gog" && to == "ogog") return emit(triangle_to_json(gog_to_ogog(t))), kExitOk;
    if (from == "gog" && to == "asm") return emit(asm_to_json(gog_to_asm(t))), kExitOk;
    if (from == "gog" && to == "gog-involution")
      return emit(triangle_to_json(gog_involution(t))), kExitOk;
    if (from == "ogog" && to == "gog") return emit(triangle_to_json(ogog_to_gog(t))), kExitOk;
    if (from == "ogog" && to == "ogog-phi") return emit(triangle_to_json(phi_triangle(t))), kExitOk;
  } else if (from == "asm") {
    AsmMatrix a = asm_from_json(j);
    if (to == "gog") return emit(triangle_to_json(asm_to_gog(a))), kExitOk;
    if (to == "asm-rowrev") return emit(asm_to_json(row_reverse(a))), kExitOk;
  } else if (from == "fn21") {
    DeFinettiPoset p = definetti_poset_from_json(j);
    if (to == "kagog") return emit(triangle_to_json(refinement_to_kagog(p))), kExitOk;
  } else if (from == "le-fn2") {
    auto [n, order] = order_from_json(j);
    if (to == "syt") return emit(tableau_to_json(le_to_tableau(n, order))), kExitOk;
  } else if (from == "syt") {
    ShiftedTableau t = tableau_from_json(j);
    if (to == "le-fn2") return emit(order_to_json(t.n, tableau_to_le(t))), kExitOk;
  } else if (from == "monotone") {
    MonotoneSequence s = sequence_from_json(j);
    if (to == "coin") return emit(coin_to_json(sigma(s))), kExitOk;
    if (to == "omagog") return emit(triangle_to_json(rho(s))), kExitOk;
  } else if (from == "coin") {
    CoinPyramid c = coin_from_json(j);
    if (to == "monotone") return emit(sequence_to_json(sigma_inverse(c))), kExitOk;
    if (to == "kagog") return emit(triangle_to_json(tau(c))), kExitOk;
  } else if (from == "pyramid") {
    TwoColorPyramid p = pyramid_from_json(j);
    if (to == "triangle") return emit(triangle_to_json(from_pyramid(p))), kExitOk;
  } else {
    std::cerr << "error: unknown source type: " << from << "\n";
    return kExitUsage;
  }
  std::cerr << "error: unsupported conversion edge " << from << " -> " << to << "\n";
  return kExitUsage;
}

int cmd_verify(const std::string& check, int n, bool force) {
  if (check == "counts") {
    check_guard("counts", n, 6, force);
    const BigInt ballot = ballot_number(n);
    const auto le = linear_extension_count(build_fn2(n).base);
    if (BigInt(le) != ballot) {
      std::cout << "FAIL counts: linear extensions " << le << " != ballot " << ballot << "\n";
      return kExitDomain;
    }
    const BigInt expect = asm_count_formula(n);
    for (auto fam : {TriangleFamily::kagog, TriangleFamily::magog, TriangleFamily::gog}) {
      unsigned long long c = 0;
      enumerate_family(fam, n, [&](const Triangle&) {
        ++c;
        return true;
      });
      if (BigInt(c) != expect) {
        std::cout << "FAIL counts: " << family_name(fam) << " " << c << " != " << expect << "\n";
        return kExitDomain;
      }
    }
    std::cout << "pass: counts at n=" << n << " (ballot " << ballot << ", asm " << expect
              << ")\n";
    return kExitOk;
  }
  if (check == "psi-roundtrip") {
    check_guard("psi-roundtrip", n, 6, force);
    std::set<std::vector<std::vector<int>>> images;
    unsigned long long total = 0;
    bool ok = true;
    Triangle bad;
    enumerate_family(TriangleFamily::omagog, n, [&](const Triangle& t) {
      const Triangle k = psi_triangle(t);
      if (validate(k).ok && psi_inverse_triangle(k) == t) {
        images.insert(k.rows);
        ++total;
        return true;
      }
      ok = false;
      bad = t;
      return false;
    });
    unsigned long long kagogs = 0;
    enumerate_family(TriangleFamily::kagog, n, [&](const Triangle&) {
      ++kagogs;
      return true;
    });
    if (!ok || images.size() != total || kagogs != total) {
      std::cout << "FAIL psi-roundtrip at n=" << n;
      if (!ok) std::cout << ": " << triangle_to_json(bad).dump();
      std::cout << "\n";
      return kExitDomain;
    }
    std::cout << "pass: psi-roundtrip at n=" << n << ", " << total << " cases\n";
    return kExitOk;
  }
  if (check == "phi-involution") {
    check_guard("phi-involution", n, 6, force);
    unsigned long long total = 0;
    bool ok = true;
    Triangle bad;
    enumerate_family(TriangleFamily::ogog, n, [&](const Triangle& t) {
      const Triangle u = phi_triangle(t);
      if (validate(u).ok && phi_triangle(u) == t) {
        ++total;
        return true;
      }
      ok = false;
      bad = t;
      return false;
    });
    if (!ok) {
      std::cout << "FAIL phi-involution at n=" << n << ": " << triangle_to_json(bad).dump()
                << "\n";
      return kExitDomain;
    }
    std::cout << "pass: phi-involution at n=" << n << ", " << total << " cases\n";
    return kExitOk;
  }
  if (check == "asm-rowrev") {
    check_guard("asm-rowrev", n, 6, force);
    AsmMatrix bad;
    bool ok = true;
    unsigned long long total = 0;
    enumerate_asm(
        n,
        [&](const AsmMatrix& a) {
          if (asm_to_gog(row_reverse(a)) != gog_involution(asm_to_gog(a))) {
            ok = false;
            bad = a;
            return false;
          }
          ++total;
          return true;
        },
        true);
    if (!ok) {
      std::cout << "FAIL asm-rowrev at n=" << n << ": " << asm_to_json(bad).dump() << "\n";
      return kExitDomain;
    }
    std::cout << "pass: asm-rowrev at n=" << n << ", " << total << " cases\n";
    return kExitOk;
  }
  if (check == "catalan-commute") {
    check_guard("catalan-commute", n, 10, force);
    const BigInt cat = catalan_number(n);
    const auto seqs = collect_monotone(n);
    const auto coins = collect_coin(n);
    std::set<std::vector<std::vector<int>>> primed_s, primed_c;
    for (const auto& s : seqs) primed_s.insert(rho(s).rows);
    for (const auto& c : coins) primed_c.insert(tau(c).rows);
    if (BigInt(seqs.size()) != cat || BigInt(coins.size()) != cat ||
        BigInt(primed_s.size()) != cat || BigInt(primed_c.size()) != cat) {
      std::cout << "FAIL catalan-commute at n=" << n << ": family sizes " << seqs.size() << "/"
                << coins.size() << "/" << primed_s.size() << "/" << primed_c.size()
                << " != " << cat << "\n";
      return kExitDomain;
    }
    for (const auto& s : seqs) {
      if (sigma(s) != tau_inverse(psi_triangle(rho(s)))) {
        std::cout << "FAIL catalan-commute at n=" << n << ": " << sequence_to_json(s).dump()
                  << "\n";
        return kExitDomain;
      }
    }
    std::cout << "pass: catalan-commute at n=" << n << ", " << seqs.size() << " cases\n";
    return kExitOk;
  }
  if (check == "lattice-fn21") {
    check_guard("lattice-fn21", n, 7, force);
    unsigned long long total = 0;
    const DeFinettiPoset* bad = nullptr;
    DeFinettiPoset bad_store;
    enumerate_fn21(n, Fn21Mode::via_kagog, [&](const DeFinettiPoset& p) {
      if (!lattice_check(p.base).is_lattice || !satisfies_definetti(p.base)) {
        bad_store = p;
        bad = &bad_store;
        return false;
      }
      ++total;
      return true;
    });
    if (bad) {
      std::cout << "FAIL lattice-fn21 at n=" << n << ": " << poset_to_json(*bad).dump() << "\n";
      return kExitDomain;
    }
    std::cout << "pass: lattice-fn21 at n=" << n << ", " << total << " cases\n";
    return kExitOk;
  }
  if (check == "definetti-f2") {
    static const unsigned long long expected[] = {0, 1, 1, 2, 14, 546};
    if (n < 1 || n > 5) {
      if (!force) throw InfeasibleError("definetti-f2 is guarded at n <= 5");
    }
    const auto c = count_definetti_total_orders(n, force);
    if (n <= 5 && c != expected[n]) {
      std::cout << "FAIL definetti-f2 at n=" << n << ": count " << c << " != " << expected[n]
                << "\n";
      return kExitDomain;
    }
    std::cout << "pass: definetti-f2 at n=" << n << ", " << c << " orders\n";
    return kExitOk;
  }
  std::cerr << "error: unknown check: " << check << "\n";
  return kExitUsage;
}

int cmd_render(const std::string& in_path, const std::string& style) {
  const Json j = Json::parse(read_input(in_path));
  const bool is_pyramid = j.contains("cubes");
  if (style == "flat") {
    const Triangle t = is_pyramid ? from_pyramid(pyramid_from_json(j)) : triangle_from_json(j);
    std::cout << render_flat(t);
    return kExitOk;
  }
  const TwoColorPyramid p =
      is_pyramid ? pyramid_from_json(j) : to_pyramid(triangle_from_json(j));
  std::cout << render_layers(p);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Finetti lattice and triangle-family toolkit"};
  app.require_subcommand(1);

  std::string family, format = "json", out_path, mode = "via-kagog";
  std::string from, to, in_path, check, style = "flat";
  int n = 0;
  bool count_only = false, force = false;

  auto* enumerate = app.add_subcommand("enumerate", "stream a family in canonical order");
  enumerate->add_option("--family", family, "family to enumerate")->required();
  enumerate->add_option("--n", n, "size / index")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--format", format, "json|ascii")
      ->check(CLI::IsMember({"json", "ascii"}));
  enumerate->add_option("--out", out_path, "output path (default stdout)");
  enumerate->add_option("--mode", mode, "fn21 enumeration mode")
      ->check(CLI::IsMember({"via-kagog", "direct"}));
  enumerate->add_flag("--force", force, "override the feasibility guard");

  auto* convert = app.add_subcommand("convert", "convert an object across a bijection");
  convert->add_option("--from", from, "source type")->required();
  convert->add_option("--to", to, "target type")->required();
  convert->add_option("--in", in_path, "input path (default stdin)");
  convert->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--check", check, "suite name")->required();
  verify->add_option("--n", n, "size / index")->required();
  verify->add_flag("--force", force, "override the feasibility guard");

  auto* render = app.add_subcommand("render", "ASCII-render a triangle or pyramid");
  render->add_option("--in", in_path, "input path (default stdin)");
  render->add_option("--style", style, "layers|flat")
      ->check(CLI::IsMember({"layers", "flat"}));

  auto* count = app.add_subcommand("count", "exact count of a family");
  count->add_option("--family", family, "family, or ballot|asm-formula|catalan")->required();
  count->add_option("--n", n, "size / index")->required();
  count->add_flag("--force", force, "override the feasibility guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(family, n, count_only, format, out_path, mode, force);
    if (convert->parsed()) return cmd_convert(from, to, in_path, out_path);
    if (verify->parsed()) return cmd_verify(check, n, force);
    if (render->parsed()) return cmd_render(in_path, style);
    if (count->parsed()) return cmd_count(family, n, force);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
