#pragma once

#include <stdexcept>
#include <string>

#include "overasym/bigfloat.hpp"

namespace overasym {

/// A statement was queried below its validity threshold; carries the smallest
/// admissible n so callers can restate the query.
class threshold_error : public std::domain_error {
public:
    threshold_error(const std::string& what, long n_min)
        : std::domain_error(what), n_min_(n_min) {}
    long n_min() const { return n_min_; }

private:
    long n_min_;
};

/// No truncation order in the scan range brought the Engel bound plus
/// round-off slack under 1/2; carries the best bound achieved.
class certification_failure : public std::runtime_error {
public:
    certification_failure(const std::string& what, long best_order, BigFloat best_bound)
        : std::runtime_error(what), best_order_(best_order), best_bound_(std::move(best_bound)) {}
    long best_order() const { return best_order_; }
    const BigFloat& best_bound() const { return best_bound_; }

private:
    long best_order_;
    BigFloat best_bound_;
};

}  // namespace overasym
