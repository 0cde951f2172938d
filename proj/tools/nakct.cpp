#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nakct/nakct.hpp"

namespace {

using nakct::Json;

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kCapacity = 3, kInternal = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return Json::parse(read_source(path)); }

nakct::Algebra read_algebra(const std::string& path) { return nakct::algebra_from_json(read_json(path)); }

nakct::Format parse_format(const std::string& s) {
  if (s == "dot") return nakct::Format::Dot;
  if (s == "tikz") return nakct::Format::Tikz;
  if (s == "ascii") return nakct::Format::Ascii;
  throw InputError("unknown render format " + s);
}

nakct::Mode parse_mode(const std::string& s) {
  if (s == "n") return nakct::Mode::N;
  if (s == "nz") return nakct::Mode::NZ;
  throw InputError("mode must be n or nz");
}

nakct::Indec parse_pair(const nakct::Algebra& A, const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("module must be written i,j");
  try {
    const int i = std::stoi(s.substr(0, comma));
    const int j = std::stoi(s.substr(comma + 1));
    if (i > j) throw InputError("module " + s + " has i > j");
    const nakct::Indec x = nakct::canonical(A, i, j);
    nakct::require_valid(A, x);
    return x;
  } catch (const std::logic_error&) {
    throw InputError("module must be written i,j");
  }
}

void emit(const Json& j) { std::cout << nakct::dump(j); }

void fail(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nakayama algebras: cluster tilting classification and singularity categories"};
  app.require_subcommand(1);

  std::string algebra_path;
  std::string second_path;
  std::string subcat_path;
  std::string render;
  std::string mode = "nz";
  std::string from, to;
  int n = 0;
  int k = 1;
  bool circle_f = false;

  auto algebra_arg = [&](CLI::App* sub) {
    sub->add_option("algebra", algebra_path, "algebra JSON file (default: standard input)");
  };
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", n, "cluster tilting degree n >= 2")->required(); };
  auto render_opt = [&](CLI::App* sub) {
    sub->add_option("--render", render, "dot, tikz or ascii")->check(CLI::IsMember({"dot", "tikz", "ascii"}));
  };

  auto* classify = app.add_subcommand("classify", "decide and construct nZ-cluster tilting subcategories");
  n_opt(classify);
  render_opt(classify);
  algebra_arg(classify);

  auto* enumerate = app.add_subcommand("enumerate", "brute-force all cluster tilting subcategories");
  n_opt(enumerate);
  enumerate->add_option("--mode", mode, "n or nz (default nz)")->check(CLI::IsMember({"n", "nz"}));
  algebra_arg(enumerate);

  auto* verify = app.add_subcommand("verify", "check a candidate subcategory");
  n_opt(verify);
  verify->add_option("--subcat", subcat_path, "subcategory JSON file")->required();
  verify->add_option("--mode", mode, "n or nz (default nz)")->check(CLI::IsMember({"n", "nz"}));
  algebra_arg(verify);

  auto* ext = app.add_subcommand("ext", "dimension of Ext^k(M, N)");
  ext->add_option("--from", from, "module M as i,j")->required();
  ext->add_option("--to", to, "module N as i,j")->required();
  ext->add_option("--k", k, "degree k >= 1 (default 1)");
  algebra_arg(ext);

  auto* ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver");
  render_opt(ar);
  ar->add_option("--subcat", subcat_path, "subcategory to draw in rectangles");
  ar->add_flag("--circle-f", circle_f, "circle the objects of the subcategory F");
  algebra_arg(ar);

  auto* rq = app.add_subcommand("resolution-quiver", "resolution quiver of the simples");
  render_opt(rq);
  algebra_arg(rq);

  auto* sing = app.add_subcommand("singularity", "model of the singularity category");
  n_opt(sing);
  algebra_arg(sing);

  auto* glue = app.add_subcommand("glue", "glue two acyclic algebras");
  glue->add_option("first", algebra_path, "first acyclic algebra")->required();
  glue->add_option("second", second_path, "second acyclic algebra")->required();

  auto* self_glue = app.add_subcommand("self-glue", "close an acyclic algebra into a cycle");
  algebra_arg(self_glue);

  auto* gldim = app.add_subcommand("gldim", "global dimension");
  algebra_arg(gldim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("UsageError", e.what());
    return kInput;
  }

  try {
    if (*classify) {
      const auto A = read_algebra(algebra_path);
      const auto r = nakct::classify_nz(A, n);
      if (render.empty()) {
        emit(nakct::to_json(r));
      } else {
        nakct::RenderSpec spec{parse_format(render), {}, {}};
        if (r.exists) spec.highlight.insert(r.subcategories[0].members.begin(), r.subcategories[0].members.end());
        std::cout << nakct::render_ar_quiver(nakct::ar_quiver(A), spec);
      }
      return r.exists ? kOk : kNegative;
    }
    if (*enumerate) {
      const auto A = read_algebra(algebra_path);
      const auto subs = nakct::enumerate_ct(A, n, parse_mode(mode));
      Json list = Json::array();
      for (const auto& c : subs) list.push_back(nakct::to_json(c.members));
      emit(Json{{"count", subs.size()}, {"subcategories", list}});
      return kOk;
    }
    if (*verify) {
      const auto A = read_algebra(algebra_path);
      const auto C = nakct::subcategory_from_json(A, read_json(subcat_path));
      const auto rep = nakct::verify_ct(A, C, n, parse_mode(mode));
      emit(nakct::to_json(rep));
      return rep.verdict ? kOk : kNegative;
    }
    if (*ext) {
      const auto A = read_algebra(algebra_path);
      const auto M = parse_pair(A, from);
      const auto N = parse_pair(A, to);
      emit(Json{{"from", nakct::to_json(M)}, {"to", nakct::to_json(N)}, {"k", k},
                {"dim", nakct::ext_dim(A, M, N, k)}});
      return kOk;
    }
    if (*ar) {
      const auto A = read_algebra(algebra_path);
      const auto q = nakct::ar_quiver(A);
      nakct::RenderSpec spec;
      if (!subcat_path.empty()) {
        const auto C = nakct::subcategory_from_json(A, read_json(subcat_path));
        spec.highlight.insert(C.members.begin(), C.members.end());
      }
      if (circle_f) {
        const auto f = nakct::f_objects(A);
        spec.circle.insert(f.objects.begin(), f.objects.end());
      }
      if (render.empty()) {
        emit(nakct::to_json(q));
      } else {
        spec.format = parse_format(render);
        std::cout << nakct::render_ar_quiver(q, spec);
      }
      return kOk;
    }
    if (*rq) {
      const auto A = read_algebra(algebra_path);
      const auto q = nakct::resolution_quiver(A);
      if (render.empty()) {
        const auto cyc = nakct::cyclic_simples(A);
        emit(Json{{"successor", nakct::to_json(q)}, {"cyclic_simples", std::vector<int>(cyc.begin(), cyc.end())}});
      } else {
        std::cout << nakct::render_resolution_quiver(q, parse_format(render));
      }
      return kOk;
    }
    if (*sing) {
      const auto A = read_algebra(algebra_path);
      const auto S = nakct::self_glued_model(A, n);
      const auto g = nakct::gamma(S);
      const auto ct = nakct::sing_ct(S);
      const auto f = nakct::f_objects(A);
      Json images = Json::array();
      for (const auto& x : nakct::indecomposables(A)) {
        const auto im = nakct::sing_image(S, x);
        if (!im.nonzero) continue;
        images.push_back(Json{{"module", nakct::to_json(x)},
                              {"target", nakct::to_json(*im.target)},
                              {"via", nakct::to_string(*im.via)}});
      }
      emit(Json{{"gamma", nakct::to_json(g.gamma)},
                {"projectives_enum", nakct::to_json(g.projectives_enum)},
                {"offsets", g.offsets},
                {"blocks", nakct::to_json(S.blocks)},
                {"distinguished", std::vector<int>(ct.distinguished_simple_indices.begin(),
                                                   ct.distinguished_simple_indices.end())},
                {"gamma_indices", std::vector<int>(ct.gamma_indices.begin(), ct.gamma_indices.end())},
                {"count", ct.count},
                {"f_category", nakct::to_json(f)},
                {"sing_images", images},
                {"gorenstein_witness", nakct::to_json(nakct::gorenstein_witness(S))}});
      return kOk;
    }
    if (*glue) {
      emit(nakct::to_json(nakct::glue(read_algebra(algebra_path), read_algebra(second_path))));
      return kOk;
    }
    if (*self_glue) {
      emit(nakct::to_json(nakct::self_glue(read_algebra(algebra_path))));
      return kOk;
    }
    if (*gldim) {
      const auto A = read_algebra(algebra_path);
      const auto g = nakct::gldim(A);
      emit(Json{{"gldim", g ? Json(*g) : Json("infinity")}});
      return kOk;
    }
  } catch (const nakct::Error& e) {
    fail(nakct::to_string(e.code()), e.what());
    if (nakct::is_capacity_error(e.code())) return kCapacity;
    return e.code() == nakct::ErrorCode::Internal ? kInternal : kInput;
  } catch (const Json::exception& e) {
    fail("InvalidJson", e.what());
    return kInput;
  } catch (const InputError& e) {
    fail("InvalidInput", e.what());
    return kInput;
  }
  return kInput;
}
