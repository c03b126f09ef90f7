#include "torsion/oracle.hpp"

#include "torsion/errors.hpp"
#include "torsion/jacobian2.hpp"

namespace torsion {

namespace {

bool all_rational(const GPoly& f)
{
    for (const auto& c : f.coefficients()) {
        if (!c.is_rational()) {
            return false;
        }
    }
    return true;
}

QPoly real_part(const GPoly& f)
{
    std::vector<Rational> c;
    for (const auto& z : f.coefficients()) {
        c.push_back(z.re());
    }
    return QPoly(std::move(c));
}

template <class F>
std::optional<std::size_t> order_on(const Curve<F>& curve, const AffinePoint<F>& p, std::size_t bound)
{
    return order_of(curve, embed_point(curve, p), bound);
}

} // namespace

std::optional<std::size_t> oracle_order(const TorsionCertificate& cert, std::size_t bound)
{
    if (cert.curve.d != 2) {
        throw UnsupportedDegree("the divisor-class oracle needs d = 2");
    }
    const auto* p = std::get_if<AffinePoint<GaussianRational>>(&cert.point);
    if (p == nullptr) {
        throw UnsupportedField("symbolic point");
    }
    if (all_rational(cert.curve.f) && p->x.is_rational() && p->y.is_rational()) {
        const auto curve = new_curve(cert.curve.d, cert.curve.n, real_part(cert.curve.f));
        return order_on(curve, AffinePoint<Rational>{p->x.re(), p->y.re()}, bound);
    }
    const auto curve = new_curve(cert.curve.d, cert.curve.n, cert.curve.f);
    return order_on(curve, *p, bound);
}

} // namespace torsion
