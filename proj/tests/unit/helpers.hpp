#ifndef ARITHLINK_TEST_HELPERS_HPP_
#define ARITHLINK_TEST_HELPERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "arithlink/cyclotomic.hpp"
#include "arithlink/parse.hpp"

namespace testing_util {

inline arithlink::CycloElement el(arithlink::CycloField const& F, std::string const& s)
{
    return arithlink::parse_element(s, F);
}

inline arithlink::CycloElement random_element(arithlink::CycloField const& F, std::mt19937_64& rng,
                                              int bound = 5)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    arithlink::ZPoly c(static_cast<std::size_t>(F.degree()));
    for (auto& x : c)
        x = d(rng);
    return F.from_coeffs(c);
}

inline arithlink::CycloElement random_nonzero(arithlink::CycloField const& F, std::mt19937_64& rng,
                                              int bound = 5)
{
    for (;;) {
        auto x = random_element(F, rng, bound);
        if (!x.is_zero())
            return x;
    }
}

inline std::vector<long> coeffs_long(arithlink::CycloElement const& x)
{
    std::vector<long> v;
    for (auto const& c : x.coeffs())
        v.push_back(mpq_class(c).get_num().get_si());
    return v;
}

} // namespace testing_util

#endif
