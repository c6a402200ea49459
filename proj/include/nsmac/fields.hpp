#ifndef NSMAC_FIELDS_HPP
#define NSMAC_FIELDS_HPP

#include "nsmac/qt_scalar.hpp"
#include "nsmac/specialization.hpp"

namespace nsmac {

// Coefficient-field contexts threaded through the generic polynomial
// operators.  Both expose the same surface; the specialized one evaluates q
// and t on the curve.

struct QtField {
    using Scalar = QtScalar;
    QtScalar zero() const { return QtScalar::zero(); }
    QtScalar one() const { return QtScalar::one(); }
    QtScalar from_int(long v) const { return QtScalar::from_int(v); }
    QtScalar q() const { return QtScalar::q(); }
    QtScalar t() const { return QtScalar::t(); }
    QtScalar t_pow(int e) const { return QtScalar::t_pow(e); }
    QtScalar q_pow(int e) const { return QtScalar::q_pow(e); }
};

struct SpecFieldCtx {
    using Scalar = SpecScalar;
    Specialization spec;

    explicit SpecFieldCtx(Specialization s) : spec(std::move(s)) {}
    SpecScalar zero() const { return spec.zero(); }
    SpecScalar one() const { return spec.one(); }
    SpecScalar from_int(long v) const { return spec.from_int(v); }
    SpecScalar q() const { return spec.q_image(); }
    SpecScalar t() const { return spec.t_image(); }
    SpecScalar t_pow(int e) const { return spec.qt_image(0, e); }
    SpecScalar q_pow(int e) const { return spec.qt_image(e, 0); }
};

}  // namespace nsmac

#endif
