#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace ore {

/// Rational quaternion w + x i + y j + z k over the Hamilton algebra (-1,-1)_Q.
struct Quaternion {
    mpq_class w, x, y, z;

    Quaternion() : w(0), x(0), y(0), z(0) {}
    Quaternion(mpq_class w_, mpq_class x_, mpq_class y_, mpq_class z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Quaternion(const mpq_class& real) : w(real), x(0), y(0), z(0) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
    bool is_real() const { return x == 0 && y == 0 && z == 0; }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    mpq_class norm() const { return w * w + x * x + y * y + z * z; }
    mpq_class trace() const { return 2 * w; }
    /// Precondition: nonzero.
    Quaternion inverse() const;

    std::array<mpq_class, 4> components() const { return {w, x, y, z}; }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator<(const Quaternion& a, const Quaternion& b);

    /// Literal form such as `1+2i-3j+k/2`.
    std::string to_string() const;
};

}  // namespace ore
