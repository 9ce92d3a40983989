#ifndef CECAC_FPT_HPP
#define CECAC_FPT_HPP

#include "cecac/model.hpp"

namespace cecac {

// One distinct attribute set occurring among the candidates, with everyone
// who has exactly that set.
struct CandidateType {
    std::vector<std::string> attributes;  // sorted, deduplicated
    std::vector<int> owners;              // (profit desc, id asc)
};

// Types in lexicographic order of their attribute sets.
std::vector<CandidateType> candidate_types(const Instance& inst);

// Exact solver enumerating which types the committee draws from: a type
// subset fixes the attribute truths, so the constraint check and the
// profit-maximal member choice decouple. Exponential in the type count,
// hence the cap; exceeding it raises CapExceeded.
Solution solve_fpt(const Instance& inst, int type_cap = 16);

}  // namespace cecac

#endif
