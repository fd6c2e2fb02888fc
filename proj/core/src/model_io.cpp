#include "rrhash/model_io.hpp"

#include "rrhash/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rrhash {

namespace {

constexpr const char* kMagic = "rrhash-model";
constexpr int kVersion = 1;

void put(std::ostringstream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    out << buf;
}

void put_vector(std::ostringstream& out, const char* name, const Eigen::VectorXd& v) {
    out << name;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out << ' ';
        put(out, v[i]);
    }
    out << '\n';
}

void put_matrix(std::ostringstream& out, const char* name, const Eigen::MatrixXd& m) {
    out << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            put(out, m(r, c));
        }
        out << '\n';
    }
}

class Reader {
public:
    explicit Reader(std::string_view text) : in_{std::string(text)} {}

    void expect(const std::string& word) {
        std::string got;
        if (!(in_ >> got) || got != word) fail("expected '" + word + "'");
    }

    template <class T>
    T value() {
        T v{};
        if (!(in_ >> v)) fail("truncated or malformed number");
        return v;
    }

    double real() {
        std::string tok;
        if (!(in_ >> tok)) fail("truncated model");
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) fail("malformed number '" + tok + "'");
            return v;
        } catch (const std::logic_error&) {
            fail("malformed number '" + tok + "'");
        }
    }

    Eigen::VectorXd vector(const std::string& name, int n) {
        expect(name);
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = real();
        return v;
    }

    Eigen::MatrixXd matrix(const std::string& name, int rows, int cols) {
        expect(name);
        if (value<int>() != rows || value<int>() != cols) fail("unexpected shape of " + name);
        Eigen::MatrixXd m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) m(r, c) = real();
        }
        return m;
    }

    std::string word() {
        std::string w;
        if (!(in_ >> w)) fail("truncated model");
        return w;
    }

    void finish() {
        std::string extra;
        if (in_ >> extra) fail("trailing data");
    }

    [[noreturn]] static void fail(const std::string& what) { throw ModelError("malformed model file: " + what); }

private:
    std::istringstream in_;
};

}  // namespace

std::string model_to_string(const CcaModel& m) {
    std::ostringstream out;
    out << kMagic << ' ' << kVersion << '\n';
    out << "config_digest " << (m.config_digest.empty() ? "-" : m.config_digest) << '\n';
    out << "dim1 " << m.dim1 << '\n';
    out << "dim2 " << m.dim2 << '\n';
    out << "components " << m.components << '\n';
    out << "ridge ";
    put(out, m.ridge);
    out << '\n';
    out << "samples " << m.sample_count << '\n';
    put_vector(out, "mean1", m.mean1);
    put_vector(out, "mean2", m.mean2);
    put_vector(out, "lambda", m.correlations);
    put_matrix(out, "a", m.a);
    put_matrix(out, "b", m.b);
    put_matrix(out, "s11", m.s11);
    put_matrix(out, "s22", m.s22);
    return out.str();
}

CcaModel model_from_string(std::string_view text) {
    Reader r(text);
    r.expect(kMagic);
    if (r.value<int>() != kVersion) throw ModelError("unsupported model file version");
    CcaModel m;
    r.expect("config_digest");
    m.config_digest = r.word();
    if (m.config_digest == "-") m.config_digest.clear();
    r.expect("dim1");
    m.dim1 = r.value<int>();
    r.expect("dim2");
    m.dim2 = r.value<int>();
    r.expect("components");
    m.components = r.value<int>();
    if (m.dim1 < 1 || m.dim2 < 1 || m.components < 1 || m.components > std::min(m.dim1, m.dim2)) {
        Reader::fail("inconsistent dimensions");
    }
    r.expect("ridge");
    m.ridge = r.real();
    r.expect("samples");
    m.sample_count = r.value<int>();
    m.mean1 = r.vector("mean1", m.dim1);
    m.mean2 = r.vector("mean2", m.dim2);
    m.correlations = r.vector("lambda", m.components);
    m.a = r.matrix("a", m.dim1, m.components);
    m.b = r.matrix("b", m.dim2, m.components);
    m.s11 = r.matrix("s11", m.dim1, m.dim1);
    m.s22 = r.matrix("s22", m.dim2, m.dim2);
    r.finish();
    return m;
}

void save_model(const CcaModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ModelError("cannot write model file '" + path + "'");
    out << model_to_string(model);
    if (!out) throw ModelError("cannot write model file '" + path + "'");
}

CcaModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelError("cannot read model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_string(buf.str());
}

}  // namespace rrhash
