#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exact-field
struct division_by_zero : error { using error::error; };
struct mixed_context : error { using error::error; };
struct invalid_context : error { using error::error; };
struct negative_input : error { using error::error; };

// polynomials / series
struct no_such_term : error { using error::error; };
struct non_unit_reciprocal : error { using error::error; };
struct parse_error : error { using error::error; };

// matrix-group
struct group_too_large : error { using error::error; };
struct singular_generator : error { using error::error; };

// zeta-core
struct precondition_d : error { using error::error; };
struct singular_system : error { using error::error; };
struct unsupported_dual_form : error { using error::error; };
struct degree_mismatch : error { using error::error; };

// rh-checker
struct zero_polynomial : error { using error::error; };
struct not_square_free : error { using error::error; };

// moment-search
struct trivial_nullspace : error { using error::error; };
struct nullspace_dimension : error {
    explicit nullspace_dimension(int dim, const std::string& what)
        : error(what), dimension(dim) {}
    int dimension;
};

// extremal-ring
struct no_basis : error { using error::error; };
struct singular_cancellation : error { using error::error; };
struct nonpositive_alpha_beta : error { using error::error; };

// violated internal invariants (bugs, not inputs)
struct consistency_error : error { using error::error; };

}  // namespace qzeta
