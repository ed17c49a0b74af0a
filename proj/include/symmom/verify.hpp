#ifndef SYMMOM_VERIFY_HPP
#define SYMMOM_VERIFY_HPP

#include <string>
#include <vector>

#include "symmom/eigenform.hpp"

namespace symmom::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<Check> suite_combinat();
std::vector<Check> suite_eigenform(const CoefficientSeries& delta);
std::vector<Check> suite_sympow(const CoefficientSeries& delta);
std::vector<Check> suite_quadform(long N);
std::vector<Check> suite_moments(const CoefficientSeries& delta);

/// Runs one suite by name ("combinat", "eigenform", "sympow", "quadform",
/// "moments" or "all"). N caps the coefficient length used.
std::vector<Check> run(const std::string& suite, long N);

} // namespace symmom::verify

#endif
