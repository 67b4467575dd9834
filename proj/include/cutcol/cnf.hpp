#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutcol {

// CNF formula in DIMACS convention: literals are signed 1-based variable ids.
struct CnfFormula {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;

    int nclauses() const { return static_cast<int>(clauses.size()); }
    // largest clause size
    int max_clause_size() const;
    // invariants: no repeated literal, no literal with its negation, all vars in range
    std::vector<std::string> validate() const;
    bool every_variable_occurs() const;
};

CnfFormula read_dimacs_cnf(std::istream& in);
CnfFormula load_cnf(const std::string& path);
void write_dimacs_cnf(std::ostream& out, const CnfFormula& f);

// Exhaustive satisfiability over 2^n assignments; n capped at 24.
bool brute_force_satisfiable(const CnfFormula& f);

// FNV-1a over the canonical DIMACS text, for metadata.
uint64_t formula_hash(const CnfFormula& f);

}  // namespace cutcol
