#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes every argument type for a byte-container constructor; Eigen
// 3.4 expressions expose a const_iterator typedef that breaks the probe.
namespace boost::multiprecision::detail {
template <class C>
    requires requires { typename C::StorageKind; }
struct is_byte_container_imp<C, true> : public boost::false_type {};
} // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace confspace {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace confspace
