#ifndef OHNO_TEST_UTIL_HPP
#define OHNO_TEST_UTIL_HPP

#include <cmath>
#include <ostream>
#include <string>

#include "ohno/ohno.hpp"

namespace ohno {

inline void PrintTo(const NcPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Word& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const MzvComb& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const ZetaPoly& z, std::ostream* os) { *os << z.to_string(); }
template <class C>
void PrintTo(const MultiSeries<C>& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace ohno

namespace testing_helpers {

inline ohno::NcPoly P(const std::string& s) { return ohno::NcPoly::parse(s); }
inline ohno::Word W(const std::string& s) { return ohno::Word::parse(s); }

inline double to_double(const ohno::ArbFloat& v) { return std::stod(v.to_string(30)); }

inline double to_double_abs(const ohno::ArbFloat& v) { return std::fabs(v.to_double()); }

inline ohno::ArbFloat dec(const std::string& s, long bits = 256) { return ohno::ArbFloat::from_string(s, ohno::Precision{bits}); }

}  // namespace testing_helpers

#endif
