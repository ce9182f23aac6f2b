#include "io_internal.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hlsb {

using nlohmann::json;

ParseError::ParseError(const std::string& ptr, const std::string& message)
    : std::runtime_error((ptr.empty() ? std::string("/") : ptr) + ": " + message), pointer(ptr) {}

namespace detail {

namespace {

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ptr, "missing field '" + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw ParseError(ptr, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw ParseError(ptr, "expected an array");
  return v;
}

const json& as_object(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw ParseError(ptr, "expected an object");
  return v;
}

// A scalar expression remembered with its location, parsed over the
// source space and later substituted per variant.
struct Expr {
  Scalar value;
  std::string ptr;
};

Expr parse_expr(const json& v, const SpacePtr& space, const std::string& ptr) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = std::to_string(v.get<long long>());
  else
    throw ParseError(ptr, "expected a scalar expression (string or integer)");
  try {
    return {Scalar::parse(text, space), ptr};
  } catch (const std::exception& e) {
    throw ParseError(ptr, e.what());
  }
}

BasisPtr parse_basis(const json& v, const std::string& ptr) {
  std::vector<SuperBasis::Element> elems;
  const json& arr = as_array(v, ptr);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at(ptr, i);
    const json& e = as_object(arr[i], p);
    std::string label = as_string(field(e, "label", p), at(p, "label"));
    Parity par;
    try {
      par = parse_parity(as_string(field(e, "parity", p), at(p, "parity")));
    } catch (const ParityError& err) {
      throw ParseError(at(p, "parity"), err.what());
    }
    for (const auto& x : elems)
      if (x.label == label) throw ParseError(at(p, "label"), "duplicate basis label '" + label + "'");
    if (label.empty()) throw ParseError(at(p, "label"), "empty basis label");
    elems.push_back({label, par});
  }
  return make_basis(std::move(elems));
}

int index_in(const SuperBasis& b, const json& v, const std::string& ptr) {
  std::string l = as_string(v, ptr);
  int i = b.index_of(l);
  if (i < 0) throw ParseError(ptr, "unknown basis label '" + l + "'");
  return i;
}

// row-major square matrix of expressions; absent means identity
std::vector<Expr> parse_matrix(const json* v, int n, const SpacePtr& space, const std::string& ptr) {
  std::vector<Expr> m;
  if (!v) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.push_back({Scalar(i == j ? 1 : 0), ptr});
    return m;
  }
  const json& rows = as_array(*v, ptr);
  if (static_cast<int>(rows.size()) != n) throw ParseError(ptr, "expected " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i) {
    const std::string rp = at(ptr, i);
    const json& row = as_array(rows[i], rp);
    if (static_cast<int>(row.size()) != n) throw ParseError(rp, "expected " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j) m.push_back(parse_expr(row[j], space, at(rp, j)));
  }
  return m;
}

struct Entry3 {
  int i, j, k;
  Expr coef;
};
struct Entry2 {
  int i, j;
  Expr coef;
};

std::vector<Entry3> parse_entries3(const json* v, const SuperBasis& b, const SpacePtr& space, const std::string& ptr) {
  std::vector<Entry3> out;
  if (!v) return out;
  const json& arr = as_array(*v, ptr);
  std::set<std::array<int, 3>> seen;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string p = at(ptr, e);
    const json& t = as_array(arr[e], p);
    if (t.size() != 4) throw ParseError(p, "expected [label, label, label, coefficient]");
    Entry3 en{index_in(b, t[0], at(p, 0)), index_in(b, t[1], at(p, 1)), index_in(b, t[2], at(p, 2)),
              parse_expr(t[3], space, at(p, 3))};
    if (!seen.insert({en.i, en.j, en.k}).second) throw ParseError(p, "duplicate entry");
    out.push_back(std::move(en));
  }
  return out;
}

std::vector<Entry2> parse_entries2(const json& v, const SuperBasis& b, const SpacePtr& space, const std::string& ptr) {
  std::vector<Entry2> out;
  const json& arr = as_array(v, ptr);
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string p = at(ptr, e);
    const json& t = as_array(arr[e], p);
    if (t.size() != 3) throw ParseError(p, "expected [label, label, coefficient]");
    Entry2 en{index_in(b, t[0], at(p, 0)), index_in(b, t[1], at(p, 1)), parse_expr(t[2], space, at(p, 2))};
    if (!seen.insert({en.i, en.j}).second) throw ParseError(p, "duplicate entry");
    out.push_back(std::move(en));
  }
  return out;
}

struct RawRep {
  BasisPtr module;
  std::vector<Expr> A;
  std::vector<std::vector<Expr>> rho;  // per algebra basis element, row-major over module
};

struct Substituter {
  std::vector<Scalar> images;
  SpacePtr target;
  Scalar operator()(const Expr& e) const {
    try {
      return e.value.substitute(images, target);
    } catch (const std::exception& ex) {
      throw ParseError(e.ptr, ex.what());
    }
  }
};

Matrix build_matrix(const std::vector<Expr>& m, int n, const Substituter& sub) {
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = sub(m[static_cast<std::size_t>(i) * n + j]);
  return out;
}

void require_even(const Matrix& m, const std::vector<Expr>& src, const SuperBasis& b, const std::string& what) {
  const int n = b.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.parity(i) != b.parity(j) && !m(i, j).is_zero())
        throw ParseError(src[static_cast<std::size_t>(i) * n + j].ptr, what + " must be even (entry mixes parities)");
}

}  // namespace

DefinitionFile parse_definition_json(const json& j, const std::string& ptr, bool require_version) {
  as_object(j, ptr);
  if (require_version) {
    const json& v = field(j, "format_version", ptr);
    if (!v.is_number_integer() || v.get<int>() != 1)
      throw ParseError(at(ptr, "format_version"), "unsupported format_version (expected 1)");
  }
  DefinitionFile f;
  if (auto it = j.find("id"); it != j.end()) f.id = as_string(*it, at(ptr, "id"));
  if (auto it = j.find("description"); it != j.end()) f.description = as_string(*it, at(ptr, "description"));
  if (auto it = j.find("expected"); it != j.end()) {
    f.expected = as_string(*it, at(ptr, "expected"));
    if (f.expected != "bialgebra" && f.expected != "algebra-only" && f.expected != "coalgebra-only")
      throw ParseError(at(ptr, "expected"), "expected must be bialgebra, algebra-only or coalgebra-only");
  }
  if (auto it = j.find("multiplicative"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError(at(ptr, "multiplicative"), "expected a boolean");
    f.multiplicative = it->get<bool>();
  }

  // parameters: declared ones survive, substitution-only names are eliminated
  std::vector<ParamSpace::Param> declared;
  if (auto it = j.find("parameters"); it != j.end()) {
    const json& arr = as_array(*it, at(ptr, "parameters"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = at(at(ptr, "parameters"), i);
      const json& o = as_object(arr[i], p);
      ParamSpace::Param prm{as_string(field(o, "name", p), at(p, "name")), false};
      if (auto inv = o.find("invertible"); inv != o.end()) {
        if (!inv->is_boolean()) throw ParseError(at(p, "invertible"), "expected a boolean");
        prm.invertible = inv->get<bool>();
      }
      for (const auto& d : declared)
        if (d.name == prm.name) throw ParseError(at(p, "name"), "duplicate parameter '" + prm.name + "'");
      declared.push_back(prm);
    }
  }
  struct Variant {
    std::string label;
    std::map<std::string, std::pair<const json*, std::string>> subs;  // name -> (value, pointer)
  };
  std::map<std::string, std::pair<const json*, std::string>> base_subs;
  auto read_subs = [&](const json& obj, const std::string& p, auto& into) {
    as_object(obj, p);
    for (auto it = obj.begin(); it != obj.end(); ++it) into[it.key()] = {&it.value(), at(p, it.key())};
  };
  if (auto it = j.find("substitutions"); it != j.end()) read_subs(*it, at(ptr, "substitutions"), base_subs);
  std::vector<Variant> variants;
  if (auto it = j.find("variants"); it != j.end()) {
    const json& arr = as_array(*it, at(ptr, "variants"));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = at(at(ptr, "variants"), i);
      const json& o = as_object(arr[i], p);
      Variant v;
      v.label = as_string(field(o, "label", p), at(p, "label"));
      v.subs = base_subs;
      if (auto s = o.find("substitutions"); s != o.end()) read_subs(*s, at(p, "substitutions"), v.subs);
      variants.push_back(std::move(v));
    }
  } else {
    variants.push_back({"", base_subs});
  }
  std::vector<ParamSpace::Param> source_params = declared;
  for (const auto& v : variants)
    for (const auto& [name, _] : v.subs) {
      bool known = false;
      for (const auto& p : source_params) known = known || p.name == name;
      if (!known) source_params.push_back({name, true});
    }
  SpacePtr source = make_space(source_params);
  SpacePtr target = make_space(declared);

  BasisPtr basis = parse_basis(field(j, "basis", ptr), at(ptr, "basis"));
  const int n = basis->size();
  const auto alpha_it = j.find("alpha");
  std::vector<Expr> alpha_src = parse_matrix(alpha_it == j.end() ? nullptr : &*alpha_it, n, source, at(ptr, "alpha"));
  auto opt = [&](const char* key) -> const json* {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  };
  std::vector<Entry3> br = parse_entries3(opt("bracket"), *basis, source, at(ptr, "bracket"));
  std::vector<Entry3> cob = parse_entries3(opt("cobracket"), *basis, source, at(ptr, "cobracket"));

  std::map<std::string, std::vector<Entry2>> tensors;
  if (const json* t = opt("tensors")) {
    as_object(*t, at(ptr, "tensors"));
    for (auto it = t->begin(); it != t->end(); ++it)
      tensors[it.key()] = parse_entries2(it.value(), *basis, source, at(at(ptr, "tensors"), it.key()));
  }
  std::map<std::string, std::vector<Expr>> morphisms;
  if (const json* m = opt("morphisms")) {
    as_object(*m, at(ptr, "morphisms"));
    for (auto it = m->begin(); it != m->end(); ++it)
      morphisms[it.key()] = parse_matrix(&it.value(), n, source, at(at(ptr, "morphisms"), it.key()));
  }
  std::map<std::string, RawRep> reps;
  if (const json* r = opt("representations")) {
    as_object(*r, at(ptr, "representations"));
    for (auto it = r->begin(); it != r->end(); ++it) {
      const std::string p = at(at(ptr, "representations"), it.key());
      const json& o = as_object(it.value(), p);
      RawRep raw;
      raw.module = parse_basis(field(o, "module", p), at(p, "module"));
      const int m = raw.module->size();
      auto a = o.find("A");
      raw.A = parse_matrix(a == o.end() ? nullptr : &*a, m, source, at(p, "A"));
      raw.rho.assign(n, {});
      const json& rho = as_object(field(o, "rho", p), at(p, "rho"));
      for (auto e = rho.begin(); e != rho.end(); ++e) {
        int idx = basis->index_of(e.key());
        if (idx < 0) throw ParseError(at(at(p, "rho"), e.key()), "unknown basis label '" + e.key() + "'");
        raw.rho[idx] = parse_matrix(&e.value(), m, source, at(at(p, "rho"), e.key()));
      }
      for (int i = 0; i < n; ++i)
        if (raw.rho[i].empty())
          for (int k = 0; k < m * m; ++k) raw.rho[i].push_back({Scalar(0), p});
      reps[it.key()] = std::move(raw);
    }
  }

  // pairs listed in one order only get their mirror by skew-symmetry
  std::set<std::pair<int, int>> listed;
  for (const auto& e : br) listed.insert({e.i, e.j});

  for (const auto& v : variants) {
    Substituter sub{{}, target};
    for (std::size_t p = 0; p < source->size(); ++p) {
      const std::string& name = (*source)[p].name;
      auto s = v.subs.find(name);
      if (s != v.subs.end()) {
        sub.images.push_back(parse_expr(*s->second.first, target, s->second.second).value);
      } else if (p < declared.size()) {
        sub.images.push_back(Scalar::param(target, p));
      } else {
        throw ParseError(at(ptr, "variants"), "parameter '" + name + "' is not substituted in variant '" + v.label + "'");
      }
    }
    Definition d;
    d.id = f.id;
    d.variant = v.label;
    d.description = f.description;
    d.multiplicative = f.multiplicative;
    d.space = target;
    Matrix alpha = build_matrix(alpha_src, n, sub);
    require_even(alpha, alpha_src, *basis, "alpha");
    Tensor3 c(basis, Parity::even), dd(basis, Parity::even);
    for (const auto& e : br) {
      Scalar s = sub(e.coef);
      if (s.is_zero()) continue;
      if (basis->parity(e.i) + basis->parity(e.j) != basis->parity(e.k))
        throw ParseError(e.coef.ptr, "bracket entry violates the grading (|x|+|y| != |z|)");
      c(e.i, e.j, e.k) = s;
      if (e.i != e.j && !listed.count({e.j, e.i}))
        c(e.j, e.i, e.k) = s * -koszul(basis->parity(e.i), basis->parity(e.j));
    }
    for (const auto& e : cob) {
      Scalar s = sub(e.coef);
      if (s.is_zero()) continue;
      if (basis->parity(e.j) + basis->parity(e.k) != basis->parity(e.i))
        throw ParseError(e.coef.ptr, "cobracket entry violates the grading (|y|+|z| != |x|)");
      dd(e.i, e.j, e.k) = s;
    }
    d.structure = HomSuperBialgebra(HomSuperAlgebra(basis, std::move(c), alpha), std::move(dd));
    for (const auto& [name, entries] : tensors) {
      std::optional<Parity> par;
      Tensor2 t(basis, Parity::even);
      for (const auto& e : entries) {
        Scalar s = sub(e.coef);
        if (s.is_zero()) continue;
        Parity p = basis->parity(e.i) + basis->parity(e.j);
        if (par && *par != p) throw ParseError(e.coef.ptr, "tensor '" + name + "' is not homogeneous");
        par = p;
        t(e.i, e.j) = s;
      }
      if (par && *par == Parity::odd) {
        Tensor2 odd(basis, Parity::odd);
        odd += t;
        t = odd;
      }
      d.tensors.emplace(name, std::move(t));
    }
    for (const auto& [name, src] : morphisms) {
      Matrix m = build_matrix(src, n, sub);
      require_even(m, src, *basis, "morphism '" + name + "'");
      d.morphisms.emplace(name, std::move(m));
    }
    for (const auto& [name, raw] : reps) {
      const int m = raw.module->size();
      Representation R{d.structure.algebra, raw.module, {}, build_matrix(raw.A, m, sub)};
      for (int i = 0; i < n; ++i) R.rho.push_back(build_matrix(raw.rho[i], m, sub));
      d.representations.emplace(name, std::move(R));
    }
    f.instances.push_back(std::move(d));
  }
  return f;
}

}  // namespace detail

DefinitionFile parse_definition(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return detail::parse_definition_json(j, "", true);
}

DefinitionFile read_definition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_definition(ss.str());
}

namespace {

nlohmann::ordered_json matrix_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json basis_json(const SuperBasis& b) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : b.elements()) arr.push_back({{"label", e.label}, {"parity", to_string(e.parity)}});
  return arr;
}

}  // namespace

std::string write_definition(const Definition& d, int indent) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  if (!d.id.empty()) j["id"] = d.name();
  if (!d.description.empty()) j["description"] = d.description;
  j["multiplicative"] = d.multiplicative;
  auto params = nlohmann::ordered_json::array();
  if (d.space)
    for (const auto& p : d.space->params()) params.push_back({{"name", p.name}, {"invertible", p.invertible}});
  j["parameters"] = params;
  const auto& B = d.structure;
  const auto& b = *B.basis();
  const int n = B.dim();
  j["basis"] = basis_json(b);
  j["alpha"] = matrix_json(B.alpha());
  auto br = nlohmann::ordered_json::array();
  auto cob = nlohmann::ordered_json::array();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!B.algebra.bracket(x, y, z).is_zero())
          br.push_back({b.label(x), b.label(y), b.label(z), B.algebra.bracket(x, y, z).to_string()});
        if (!B.cobracket(x, y, z).is_zero())
          cob.push_back({b.label(x), b.label(y), b.label(z), B.cobracket(x, y, z).to_string()});
      }
  j["bracket"] = br;
  j["cobracket"] = cob;
  if (!d.tensors.empty()) {
    nlohmann::ordered_json t;
    for (const auto& [name, T] : d.tensors) {
      auto arr = nlohmann::ordered_json::array();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (!T(x, y).is_zero()) arr.push_back({b.label(x), b.label(y), T(x, y).to_string()});
      t[name] = arr;
    }
    j["tensors"] = t;
  }
  if (!d.morphisms.empty()) {
    nlohmann::ordered_json m;
    for (const auto& [name, M] : d.morphisms) m[name] = matrix_json(M);
    j["morphisms"] = m;
  }
  if (!d.representations.empty()) {
    nlohmann::ordered_json r;
    for (const auto& [name, R] : d.representations) {
      nlohmann::ordered_json o;
      o["module"] = basis_json(*R.module);
      o["A"] = matrix_json(R.A);
      nlohmann::ordered_json rho;
      for (int i = 0; i < n; ++i) rho[b.label(i)] = matrix_json(R.rho[i]);
      o["rho"] = rho;
      r[name] = o;
    }
    j["representations"] = r;
  }
  return j.dump(indent) + "\n";
}

std::string report_to_json(const CheckReport& r, int indent) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  auto axioms = nlohmann::ordered_json::array();
  for (const auto& a : r.failed_axioms()) axioms.push_back(a);
  j["failed_axioms"] = axioms;
  auto vs = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json o;
    o["axiom"] = v.axiom;
    o["indices"] = v.indices;
    auto labels = nlohmann::ordered_json::array();
    for (int i : v.indices) labels.push_back(v.index_basis ? v.index_basis->label(i) : std::to_string(i));
    o["labels"] = labels;
    o["residual"] = v.residual.to_string();
    vs.push_back(o);
  }
  j["violations"] = vs;
  return j.dump(indent);
}

}  // namespace hlsb
