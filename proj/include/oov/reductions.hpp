#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oov/bits.hpp"
#include "oov/instance.hpp"

namespace oov {

// Partial-match pattern over {0, 1, *}.
struct PMPattern {
    enum class Symbol : uint8_t { zero = 0, one = 1, wildcard = 2 };

    std::vector<Symbol> symbols;

    static PMPattern from_string(std::string_view s) {
        PMPattern p;
        p.symbols.reserve(s.size());
        for (char ch : s) {
            switch (ch) {
                case '0': p.symbols.push_back(Symbol::zero); break;
                case '1': p.symbols.push_back(Symbol::one); break;
                case '*': p.symbols.push_back(Symbol::wildcard); break;
                default:
                    throw std::invalid_argument("PMPattern: expected 0, 1 or *, got '" +
                                                std::string(1, ch) + "'");
            }
        }
        return p;
    }

    uint32_t dim() const { return static_cast<uint32_t>(symbols.size()); }

    bool matches(const BitVec& x) const {
        require_same_dim(x.dim(), dim(), "PMPattern::matches");
        for (uint32_t j = 0; j < dim(); ++j) {
            if (symbols[j] == Symbol::wildcard) continue;
            if (x.get(j) != (symbols[j] == Symbol::one)) return false;
        }
        return true;
    }
};

// Coordinate j doubles into the pair (2j, 2j+1): inputs carry (x_j, 1-x_j),
// query symbols 0 -> (1,0), 1 -> (0,1), * -> (0,0). A pattern matches exactly
// when the encodings are orthogonal.
inline BitVec pm_encode_input(const BitVec& x) {
    BitVec out(2 * x.dim());
    for (uint32_t j = 0; j < x.dim(); ++j) {
        if (x.get(j)) {
            out.set(2 * j);
        } else {
            out.set(2 * j + 1);
        }
    }
    return out;
}

inline BitVec pm_encode_query(const PMPattern& y) {
    BitVec out(2 * y.dim());
    for (uint32_t j = 0; j < y.dim(); ++j) {
        switch (y.symbols[j]) {
            case PMPattern::Symbol::zero: out.set(2 * j); break;
            case PMPattern::Symbol::one: out.set(2 * j + 1); break;
            case PMPattern::Symbol::wildcard: break;
        }
    }
    return out;
}

// q is a subset of S exactly when q avoids the complement of S.
inline BitVec subset_encode_input(const CoordSet& s) {
    CoordSet rest = s.complement();
    return BitVec::from_support(s.dim(), rest.members());
}

inline BitVec subset_encode_query(const CoordSet& q) {
    return BitVec::from_support(q.dim(), q.members());
}

// S is contained in q exactly when S avoids the complement of q.
inline BitVec containment_encode_input(const CoordSet& s) {
    return BitVec::from_support(s.dim(), s.members());
}

inline BitVec containment_encode_query(const CoordSet& q) {
    CoordSet rest = q.complement();
    return BitVec::from_support(q.dim(), rest.members());
}

struct DNFLiteral {
    uint32_t var;
    bool negated;
};

// Disjunction of conjunctive clauses; a clause never repeats a variable.
struct DNFFormula {
    uint32_t var_count = 0;
    std::vector<std::vector<DNFLiteral>> clauses;

    DNFFormula() = default;
    DNFFormula(uint32_t vars, std::vector<std::vector<DNFLiteral>> cls)
        : var_count(vars), clauses(std::move(cls)) {
        for (const auto& clause : clauses) {
            if (clause.empty()) throw std::invalid_argument("DNFFormula: empty clause");
            std::vector<char> seen(var_count, 0);
            for (const DNFLiteral& lit : clause) {
                if (lit.var >= var_count)
                    throw std::invalid_argument("DNFFormula: variable index out of range");
                if (seen[lit.var])
                    throw std::invalid_argument(
                        "DNFFormula: variable repeated within a clause (contradictory or "
                        "duplicate literal)");
                seen[lit.var] = 1;
            }
        }
    }

    bool eval(const BitVec& assignment) const {
        require_same_dim(assignment.dim(), var_count, "DNFFormula::eval");
        for (const auto& clause : clauses) {
            bool sat = true;
            for (const DNFLiteral& lit : clause) {
                if (assignment.get(lit.var) == lit.negated) {
                    sat = false;
                    break;
                }
            }
            if (sat) return true;
        }
        return false;
    }
};

// Clause bit 2j flags a positive literal on x_j, bit 2j+1 a negated one; an
// assignment sets bit 2j when a_j = 0 and bit 2j+1 when a_j = 1. A clause is
// satisfied exactly when no literal is falsified, i.e. the vectors are
// orthogonal, so the formula value equals the OnlineOV answer.
inline OVInstance dnf_encode(const DNFFormula& phi) {
    std::vector<BitVec> vecs;
    vecs.reserve(phi.clauses.size());
    for (const auto& clause : phi.clauses) {
        BitVec v(2 * phi.var_count);
        for (const DNFLiteral& lit : clause) v.set(2 * lit.var + (lit.negated ? 1 : 0));
        vecs.push_back(std::move(v));
    }
    return OVInstance(2 * phi.var_count, std::move(vecs));
}

inline BitVec dnf_encode_assignment(const BitVec& a) {
    BitVec out(2 * a.dim());
    for (uint32_t j = 0; j < a.dim(); ++j) {
        if (a.get(j)) {
            out.set(2 * j + 1);
        } else {
            out.set(2 * j);
        }
    }
    return out;
}

}  // namespace oov
