#ifndef ARITHLINK_ERRORS_HPP_
#define ARITHLINK_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace arithlink {

enum class errc {
    division_by_zero,
    field_mismatch,
    not_prime,
    zero_polynomial,
    not_irreducible,
    zero_unit,
    order_mismatch,
    not_primitive,
    not_in_subgroup,
    ramified_prime,
    negative_exponent,
    zero_element,
    search_exhausted,
    non_unit_at_p,
    triviality_undetermined,
    uncertified_witness,
    not_in_image,
    term_cap_exceeded,
    parse_error,
    invalid_argument,
};

/* CamelCase name used in JSON error objects, e.g. "RamifiedPrime". */
std::string_view errc_name(errc code);

class error : public std::runtime_error {
  public:
    error(errc code, std::string const& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }
    std::string const& detail() const noexcept { return detail_; }

  private:
    errc code_;
    std::string detail_;
};

/* Bounded generator search ran out of room. This is not a proof that
 * the ideal is non-principal. */
class search_exhausted : public error {
  public:
    search_exhausted(errc code, std::string const& radius, bool budget_hit,
                     std::string const& detail)
        : error(code, detail), radius_(radius), budget_hit_(budget_hit) {}

    std::string const& radius() const noexcept { return radius_; }
    /* true when the node budget stopped the walk before the radius was
     * exhausted */
    bool budget_hit() const noexcept { return budget_hit_; }

  private:
    std::string radius_;
    bool budget_hit_;
};

class parse_error : public error {
  public:
    parse_error(std::size_t column, std::string const& expected,
                std::string const& detail)
        : error(errc::parse_error, "column " + std::to_string(column) +
                                       ": " + detail + " (expected " +
                                       expected + ")"),
          column_(column), expected_(expected) {}

    std::size_t column() const noexcept { return column_; }
    std::string const& expected() const noexcept { return expected_; }

  private:
    std::size_t column_;
    std::string expected_;
};

} // namespace arithlink

#endif /* ARITHLINK_ERRORS_HPP_ */
