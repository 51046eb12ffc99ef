#ifndef LAGUERRE_TEST_PRINTERS_HPP
#define LAGUERRE_TEST_PRINTERS_HPP

#include <doctest.h>

#include "laguerre/history.hpp"
#include "laguerre/multipoly.hpp"
#include "laguerre/multiset.hpp"
#include "laguerre/permutation.hpp"

namespace doctest {

template <>
struct StringMaker<laguerre::IntMultiset> {
    static String convert(const laguerre::IntMultiset& m) { return laguerre::to_string(m).c_str(); }
};
template <>
struct StringMaker<laguerre::Permutation> {
    static String convert(const laguerre::Permutation& p) { return laguerre::to_string(p).c_str(); }
};
template <>
struct StringMaker<laguerre::LaguerreHistory> {
    static String convert(const laguerre::LaguerreHistory& w) { return laguerre::to_string(w).c_str(); }
};
template <>
struct StringMaker<laguerre::MultiPoly> {
    static String convert(const laguerre::MultiPoly& p) { return laguerre::to_string(p).c_str(); }
};

}  // namespace doctest

#endif  // LAGUERRE_TEST_PRINTERS_HPP
