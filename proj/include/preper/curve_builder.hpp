#ifndef PREPER_CURVE_BUILDER_HPP
#define PREPER_CURVE_BUILDER_HPP

#include <string>
#include <vector>

#include "preper/dynamics.hpp"

namespace preper {

// factor^multiplicity was divided out of f_{k,n} on the way to h.
struct RemovedFactor {
    std::string label;
    IntPoly factor;
    unsigned multiplicity = 1;
};

struct CurveTrace {
    std::string route; // "generic" or "pipeline"
    std::vector<std::string> saturated_against;
    std::vector<RemovedFactor> removed;
    unsigned line_multiplicity = 0; // power of (b-a) in f_{k,2}/f_{k-1,2}
    bool removed_h02 = false;
    long t_degree = 0; // total degree of the factor shared with f_{k,1}/f_{k-1,1}
    long f_degree = 0;
    long h_degree = 0;
};

struct CurvePoly {
    unsigned k = 0;
    unsigned n = 0;
    IntPoly h;
    CurveTrace trace;
};

// f_{k,n} saturated against f_{k,m} for each proper divisor m of n and
// against f_{k-1,n}.
CurvePoly h_kn_generic(unsigned k, unsigned n, OrbitCache &cache);

// The staged construction for n = 2, k >= 2: divide by f_{k-1,2}, strip the
// (b-a) power, strip one h_{0,2} for odd k, then saturate against
// f_{k,1}/f_{k-1,1}. Throws PipelineMismatch when a step does not divide.
CurvePoly h_k2_pipeline(unsigned k, OrbitCache &cache);

// Staged construction for n = 2 and k >= 2, generic otherwise.
CurvePoly h_kn(unsigned k, unsigned n, OrbitCache &cache);

// N with mod3(h) == ((b-a)^2+1)^N; throws NotAPower otherwise.
unsigned h_kn_mod3_exponent(const CurvePoly &curve);

// f_{k,n} rebuilt from h and the trace.
IntPoly reconstruct(const CurvePoly &curve);

// (b-a)(b+2a)+1 and (b-a)^2+1.
const IntPoly &h02_closed_form();
const IntPoly &h12_closed_form();

} // namespace preper

#endif // PREPER_CURVE_BUILDER_HPP
