#include "qsuper/gauss_rational.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByNonUnit, "division by zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {mpq_class(re_ / norm), mpq_class(-im_ / norm)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw Error(ErrorKind::DivisionByNonUnit, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im;
  if (im_ == 1)
    im = "i";
  else if (im_ == -1)
    im = "-i";
  else
    im = im_.get_str() + "*i";
  if (sgn(re_) == 0) return im;
  std::string out = "(" + re_.get_str();
  if (im[0] != '-') out += "+";
  return out + im + ")";
}

}  // namespace qsuper
