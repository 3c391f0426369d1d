#include "arithlink/errors.hpp"

namespace arithlink {

std::string_view errc_name(errc code)
{
    switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_prime: return "NotPrime";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::zero_unit: return "ZeroUnit";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::not_primitive: return "NotPrimitive";
    case errc::not_in_subgroup: return "NotInSubgroup";
    case errc::ramified_prime: return "RamifiedPrime";
    case errc::negative_exponent: return "NegativeExponent";
    case errc::zero_element: return "ZeroElement";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::non_unit_at_p: return "NonUnitAtP";
    case errc::triviality_undetermined: return "TrivialityUndetermined";
    case errc::uncertified_witness: return "UncertifiedWitness";
    case errc::not_in_image: return "NotInImage";
    case errc::term_cap_exceeded: return "TermCapExceeded";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace arithlink
