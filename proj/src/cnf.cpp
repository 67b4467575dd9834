#include "cutcol/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cutcol {

int CnfFormula::max_clause_size() const {
    size_t s = 0;
    for (const auto& c : clauses) s = std::max(s, c.size());
    return static_cast<int>(s);
}

std::vector<std::string> CnfFormula::validate() const {
    std::vector<std::string> bad;
    for (size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        if (c.empty()) bad.push_back("clause " + std::to_string(j + 1) + " is empty");
        for (int lit : c) {
            int v = std::abs(lit);
            if (lit == 0 || v > nvars)
                bad.push_back("clause " + std::to_string(j + 1) + " has literal out of range");
        }
        for (size_t x = 0; x < c.size(); ++x)
            for (size_t y = x + 1; y < c.size(); ++y) {
                if (c[x] == c[y]) bad.push_back("clause " + std::to_string(j + 1) + " repeats a literal");
                if (c[x] == -c[y]) bad.push_back("clause " + std::to_string(j + 1) + " contains a literal and its negation");
            }
    }
    return bad;
}

bool CnfFormula::every_variable_occurs() const {
    std::vector<char> seen(nvars + 1, 0);
    for (const auto& c : clauses)
        for (int lit : c) seen[std::abs(lit)] = 1;
    for (int v = 1; v <= nvars; ++v)
        if (!seen[v]) return false;
    return true;
}

CnfFormula read_dimacs_cnf(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool have_header = false;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 'p') {
            std::string p, kind;
            int m;
            if (!(ss >> p >> kind >> f.nvars >> m) || kind != "cnf")
                throw std::runtime_error("bad DIMACS header");
            have_header = true;
            continue;
        }
        int lit;
        while (ss >> lit) {
            if (lit == 0) {
                f.clauses.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(lit);
            }
        }
    }
    if (!have_header) throw std::runtime_error("missing DIMACS header");
    if (!cur.empty()) throw std::runtime_error("unterminated clause");
    return f;
}

CnfFormula load_cnf(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_dimacs_cnf(f);
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.nvars << ' ' << f.nclauses() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
}

bool brute_force_satisfiable(const CnfFormula& f) {
    if (f.nvars > 24) throw std::invalid_argument("brute-force SAT capped at 24 variables");
    for (uint32_t a = 0; a < (1u << f.nvars); ++a) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (int lit : c) {
                int v = std::abs(lit);
                bool val = (a >> (v - 1)) & 1;
                if ((lit > 0) == val) { sat = true; break; }
            }
            if (!sat) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

uint64_t formula_hash(const CnfFormula& f) {
    std::ostringstream ss;
    write_dimacs_cnf(ss, f);
    uint64_t h = 14695981039346656037ULL;
    for (char ch : ss.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace cutcol
