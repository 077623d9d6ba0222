#include "en/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace en {

namespace {

Field field_of(const Json& j) {
  if (!j.contains("field")) return {};
  try {
    return Field::parse(j.at("field").get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad field: ") + e.what());
  }
}

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Json elem_terms(const Elem& e) {
  Json out = Json::array();
  for (const auto& [i, c] : e) out.push_back({i, scalar_to_json(c)});
  return out;
}

Elem elem_from_terms(const Json& j, const Field& f, std::size_t dim) {
  Elem out;
  for (const auto& t : j) {
    Index i = t.at(0).get<Index>();
    if (i >= dim) throw ParseError("basis index out of range");
    out.add(i, scalar_from_json(t.at(1), f));
  }
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const Field& f) {
  return guarded("scalar", [&] {
    if (j.is_number_integer()) return f.from(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f.p);
    throw ParseError("scalar must be an integer or a \"p/q\" string");
  });
}

Json matrix_to_json(const Matrix& m) {
  std::uint32_t p = m.modulus();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (p)
        row.push_back(m(i, j).residue());
      else
        row.push_back(m(i, j).str());
    }
    rows.push_back(std::move(row));
  }
  Json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
  if (p) out["mod"] = p;
  return out;
}

Matrix matrix_from_json(const Json& j, const Field& f) {
  return guarded("matrix", [&] {
    Field g = f;
    const Json* entries = &j;
    if (j.is_object()) {
      if (j.contains("mod")) g = Field::prime(j.at("mod").get<std::uint32_t>());
      entries = &j.at("entries");
    }
    if (!entries->is_array()) throw ParseError("matrix entries must be an array of rows");
    std::size_t rows = entries->size();
    std::size_t cols = rows ? entries->at(0).size() : 0;
    if (j.is_object()) {
      if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows) throw ParseError("row count mismatch");
      if (j.contains("cols")) cols = j.at("cols").get<std::size_t>();
    }
    Matrix m = Matrix::identity(std::max(rows, cols), g).block(0, 0, rows, cols) * g.zero();
    for (std::size_t i = 0; i < rows; ++i) {
      const Json& row = entries->at(i);
      if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row.at(c), g);
    }
    return m;
  });
}

Json algebra_to_json(const Algebra& a) {
  Json mult = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j)) mult.push_back({i, j, k, scalar_to_json(c)});
  return {{"field", a.field().name()}, {"dim", a.dim()}, {"labels", a.labels()}, {"mult", mult},
          {"unit", elem_terms(a.unit())}};
}

Algebra algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    Field f = field_of(j);
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != labels.size()) throw ParseError("dim does not match labels");
    std::size_t d = labels.size();
    Algebra a(f, labels);
    for (const auto& t : j.at("mult")) {
      Index i = t.at(0).get<Index>(), k1 = t.at(1).get<Index>(), k = t.at(2).get<Index>();
      if (i >= d || k1 >= d || k >= d) throw ParseError("basis index out of range");
      a.add_product(i, k1, k, scalar_from_json(t.at(3), f));
    }
    a.set_unit(elem_from_terms(j.at("unit"), f, d));
    return a;
  });
}

Json hopf_to_json(const Hopf& h) {
  Json out = algebra_to_json(h.alg());
  std::size_t d = h.dim();
  Json delta = Json::array(), counit = Json::array(), antipode = Json::array();
  for (Index i = 0; i < d; ++i) {
    for (const auto& [t, c] : h.delta(i)) delta.push_back({i, t / d, t % d, scalar_to_json(c)});
    counit.push_back(scalar_to_json(h.eps(i)));
    for (const auto& [k, c] : h.s(i)) antipode.push_back({i, k, scalar_to_json(c)});
  }
  out["delta"] = delta;
  out["counit"] = counit;
  out["antipode"] = antipode;
  return out;
}

Hopf hopf_from_json(const Json& j) {
  return guarded("Hopf algebra", [&] {
    Algebra a = algebra_from_json(j);
    const Field& f = a.field();
    std::size_t d = a.dim();
    std::vector<Elem> delta(d), s(d);
    std::vector<Scalar> eps;
    for (const auto& t : j.at("delta")) {
      Index i = t.at(0).get<Index>(), x = t.at(1).get<Index>(), y = t.at(2).get<Index>();
      if (i >= d || x >= d || y >= d) throw ParseError("basis index out of range");
      delta[i].add(x * d + y, scalar_from_json(t.at(3), f));
    }
    for (const auto& c : j.at("counit")) eps.push_back(scalar_from_json(c, f));
    if (eps.size() != d) throw ParseError("counit has the wrong length");
    for (const auto& t : j.at("antipode")) {
      Index i = t.at(0).get<Index>(), k = t.at(1).get<Index>();
      if (i >= d || k >= d) throw ParseError("basis index out of range");
      s[i].add(k, scalar_from_json(t.at(2), f));
    }
    return Hopf(std::move(a), std::move(delta), std::move(eps), std::move(s));
  });
}

Json module_to_json(const ModuleAlgebra& m) {
  Json action = Json::array();
  for (Index k = 0; k < m.hopf()->dim(); ++k)
    for (Index i = 0; i < m.dim(); ++i)
      for (const auto& [j, c] : m.act(k, i)) action.push_back({k, i, j, scalar_to_json(c)});
  auto t = materialize(m);
  return {{"n", en_rank(*m.hopf())}, {"algebra", algebra_to_json(t->alg())}, {"action", action}};
}

ModulePtr module_from_json(const Json& j) {
  return guarded("module", [&] {
    unsigned n = j.at("n").get<unsigned>();
    Algebra a = algebra_from_json(j.at("algebra"));
    auto h = build_en(n, a.field());
    std::vector<std::vector<Elem>> action(h->dim(), std::vector<Elem>(a.dim()));
    for (const auto& t : j.at("action")) {
      Index k = t.at(0).get<Index>(), i = t.at(1).get<Index>(), x = t.at(2).get<Index>();
      if (k >= h->dim() || i >= a.dim() || x >= a.dim()) throw ParseError("index out of range in action");
      action[k][i].add(x, scalar_from_json(t.at(3), a.field()));
    }
    return ModulePtr(std::make_shared<TableModule>(h, std::move(a), std::move(action)));
  });
}

Json load_json_arg(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError("cannot read JSON from " + arg + ": " + e.what());
  }
}

}  // namespace en
