#include "gaborlab/dft.hpp"

#include <vector>

#include <unsupported/Eigen/FFT>

namespace gaborlab::dft {
namespace {

CVector transform(const CVector& x, bool inverse) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<Complex> in(x.data(), x.data() + x.size());
  std::vector<Complex> out;
  if (inverse)
    fft.inv(out, in);
  else
    fft.fwd(out, in);
  return Eigen::Map<const CVector>(out.data(), static_cast<Eigen::Index>(out.size()));
}

CMatrix transform2(const CMatrix& x, bool inverse) {
  CMatrix y(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) y.row(r) = transform(x.row(r).transpose(), inverse).transpose();
  for (Eigen::Index c = 0; c < x.cols(); ++c) y.col(c) = transform(y.col(c), inverse);
  return y;
}

}  // namespace

CVector forward(const CVector& x) { return transform(x, false); }
CVector backward(const CVector& x) { return transform(x, true); }
CMatrix forward2(const CMatrix& x) { return transform2(x, false); }
CMatrix backward2(const CMatrix& x) { return transform2(x, true); }

}  // namespace gaborlab::dft
