#include "epur/state_io.hpp"

#include <fstream>

namespace epur {

namespace {

nlohmann::json complex_pair(const Complex& c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

Complex parse_complex(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("state json: complex entries must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

} // namespace

nlohmann::json state_to_json(const FockVector& psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (int n = 0; n <= psi.nmax(); ++n)
        amps.push_back(complex_pair(psi.amplitudes(n)));
    return {{"hbar", psi.hbar}, {"amplitudes", amps}};
}

nlohmann::json state_to_json(const FockDensity& rho) {
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 0; m <= rho.nmax(); ++m) {
        nlohmann::json row = nlohmann::json::array();
        for (int n = 0; n <= rho.nmax(); ++n)
            row.push_back(complex_pair(rho.matrix(m, n)));
        rows.push_back(std::move(row));
    }
    return {{"hbar", rho.hbar}, {"matrix", rows}};
}

LoadedState state_from_json(const nlohmann::json& j) {
    const double hbar = j.value("hbar", 1.0);
    LoadedState out;
    if (j.contains("amplitudes")) {
        const auto& amps = j.at("amplitudes");
        Eigen::VectorXcd c(amps.size());
        for (std::size_t n = 0; n < amps.size(); ++n)
            c(static_cast<Eigen::Index>(n)) = parse_complex(amps[n]);
        out.pure = FockVector(std::move(c), hbar);
    } else if (j.contains("matrix")) {
        const auto& rows = j.at("matrix");
        const auto dim = rows.size();
        Eigen::MatrixXcd m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (rows[r].size() != dim)
                throw std::invalid_argument("state json: matrix must be square");
            for (std::size_t c = 0; c < dim; ++c)
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    parse_complex(rows[r][c]);
        }
        out.density = FockDensity(std::move(m), hbar);
    } else {
        throw std::invalid_argument(
            "state json: expected an 'amplitudes' or 'matrix' field");
    }
    return out;
}

LoadedState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

void save_state_file(const std::string& path, const nlohmann::json& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << state.dump(2) << "\n";
}

} // namespace epur
