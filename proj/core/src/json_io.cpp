#include "ginv/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ginv {

namespace {

[[noreturn]] void syntax_error(const std::string& text, size_t byte, const std::string& what) {
    size_t line = 1;
    size_t col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "JSON syntax error at line " << line << ", column " << col << ": " << what;
    throw IoError(os.str());
}

GaussianRational exact_entry(const Json& e) {
    if (!e.is_object() || !e.contains("re") || !e.contains("im"))
        throw IoError("matrix entry must be an object with re and im");
    const Json& re = e["re"];
    const Json& im = e["im"];
    if (!re.is_string() || !im.is_string())
        throw IoError("exact matrix entries must be rational strings");
    return GaussianRational(rational_from_string(re.get<std::string>()),
                            rational_from_string(im.get<std::string>()));
}

Complex float_entry(const Json& e) {
    if (!e.is_object() || !e.contains("re") || !e.contains("im"))
        throw IoError("matrix entry must be an object with re and im");
    const Json& re = e["re"];
    const Json& im = e["im"];
    if (!re.is_number() || !im.is_number())
        throw IoError("f64 matrix entries must be numbers");
    return Complex(re.get<double>(), im.get<double>());
}

template <typename T, typename EntryFn>
Matrix<T> parse_entries(const Json& j, int n, EntryFn entry) {
    const Json& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw IoError("entries must hold n rows");
    Matrix<T> m(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw IoError("entries rows must hold n entries");
        for (int k = 0; k < n; ++k) m(i, k) = entry(row[static_cast<size_t>(k)]);
    }
    return m;
}

}  // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        syntax_error(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
}

Json load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void save_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << dump(j) << '\n';
}

Json to_json(const Matrix<GaussianRational>& m) {
    const int n = m.dim();
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back({{"re", rational_to_string(m(i, j).re())},
                           {"im", rational_to_string(m(i, j).im())}});
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", n}, {"backend", "exact"}, {"entries", std::move(rows)}};
}

Json to_json(const Matrix<Complex>& m) {
    const int n = m.dim();
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", n}, {"backend", "f64"}, {"entries", std::move(rows)}};
}

AnyMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("matrix JSON must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw IoError("matrix JSON needs an integer n");
    const int n = j["n"].get<int>();
    if (n < 1) throw IoError("matrix dimension must be positive");
    if (!j.contains("backend") || !j["backend"].is_string())
        throw IoError("matrix JSON needs a backend of \"exact\" or \"f64\"");
    if (!j.contains("entries")) throw IoError("matrix JSON needs entries");
    const std::string backend = j["backend"].get<std::string>();
    if (backend == "exact") return parse_entries<GaussianRational>(j, n, exact_entry);
    if (backend == "f64") return parse_entries<Complex>(j, n, float_entry);
    throw IoError("unknown backend: " + backend);
}

namespace {

template <typename T>
Json quad_json(const ClineQuadruple<T>& q) {
    return Json{{"family", family_name(q.family)},
                {"a", to_json(q.a)},
                {"b", to_json(q.b)},
                {"c", to_json(q.c)},
                {"d", to_json(q.d)}};
}

template <typename T>
ClineQuadruple<T> assemble_quad(Matrix<T> a, AnyMatrix b, AnyMatrix c, AnyMatrix d_or_a,
                                ConditionFamily family) {
    if (!std::holds_alternative<Matrix<T>>(b) || !std::holds_alternative<Matrix<T>>(c) ||
        !std::holds_alternative<Matrix<T>>(d_or_a))
        throw IoError("quadruple matrices must share one backend");
    ClineQuadruple<T> q{std::move(a), std::get<Matrix<T>>(std::move(b)),
                        std::get<Matrix<T>>(std::move(c)), std::get<Matrix<T>>(std::move(d_or_a)),
                        family};
    q.dim();
    return q;
}

}  // namespace

Json to_json(const ClineQuadruple<GaussianRational>& q) { return quad_json(q); }
Json to_json(const ClineQuadruple<Complex>& q) { return quad_json(q); }

AnyQuadruple quadruple_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("quadruple JSON must be an object");
    if (!j.contains("family") || !j["family"].is_string())
        throw IoError("quadruple JSON needs a family");
    const ConditionFamily family = family_from_name(j["family"].get<std::string>());
    for (const char* key : {"a", "b", "c"}) {
        if (!j.contains(key)) throw IoError(std::string("quadruple JSON needs matrix ") + key);
    }
    AnyMatrix a = matrix_from_json(j["a"]);
    AnyMatrix b = matrix_from_json(j["b"]);
    AnyMatrix c = matrix_from_json(j["c"]);
    AnyMatrix d = a;
    if (j.contains("d")) {
        d = matrix_from_json(j["d"]);
    } else if (family != ConditionFamily::Classical && family != ConditionFamily::LianZeng) {
        throw IoError("matrix d may be omitted only for classical and lian-zeng quadruples");
    }
    if (std::holds_alternative<Matrix<GaussianRational>>(a)) {
        return assemble_quad(std::get<Matrix<GaussianRational>>(std::move(a)), std::move(b),
                             std::move(c), std::move(d), family);
    }
    return assemble_quad(std::get<Matrix<Complex>>(std::move(a)), std::move(b), std::move(c),
                         std::move(d), family);
}

Json to_json(const HypothesisReport& rep) {
    Json conditions = Json::array();
    for (const auto& c : rep.conditions) {
        Json e{{"name", c.name}, {"residual", c.residual}, {"holds", c.holds}};
        if (c.skipped) e["skipped"] = true;
        conditions.push_back(std::move(e));
    }
    return Json{{"overall", rep.overall}, {"conditions", std::move(conditions)}};
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace ginv
