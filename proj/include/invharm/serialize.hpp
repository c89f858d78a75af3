#pragma once

#include <string>

#include "invharm/qpoly.hpp"
#include "invharm/schur_series.hpp"

namespace invharm {

/// {"n": int, "terms": [{"q": int, "lambda": [int...], "coeff": "int"}]},
/// terms in (grade, reverse-lex partition) order.
std::string to_json(const SchurSeries& s);
/// Throws DomainError on malformed input.
SchurSeries schur_series_from_json(const std::string& text);

/// {"coefficients": ["c0", "c1", ...]}.
std::string to_json(const QPoly& p);
QPoly qpoly_from_json(const std::string& text);

/// Header `degree,dimension`, one row per degree 0..deg(p).
std::string to_csv(const QPoly& p);
/// Header `q,lambda,coeff`, with lambda's parts separated by spaces.
std::string to_csv(const SchurSeries& s);

/// Comma-separated coefficient list, e.g. "1,6,3".
std::string coefficient_list(const QPoly& p);

}  // namespace invharm
