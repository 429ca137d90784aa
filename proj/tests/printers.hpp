#ifndef YLAT_TESTS_PRINTERS_HPP
#define YLAT_TESTS_PRINTERS_HPP

#include <ostream>

#include "ylat/bigint.hpp"
#include "ylat/multiseries.hpp"
#include "ylat/partition.hpp"
#include "ylat/ypoly.hpp"

namespace ylat {

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }
inline std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SkewInterval& s) {
    return os << '[' << s.mu << ", " << s.lambda << ']';
}
inline std::ostream& operator<<(std::ostream& os, const MultiSeries& s) {
    os << "series(" << s.nvars() << " vars, trunc " << s.trunc() << ", " << s.size() << " terms)";
    return os;
}

}  // namespace ylat

#endif
