#include "ore/quaternion.hpp"

#include <stdexcept>

namespace ore {

Quaternion Quaternion::inverse() const {
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("quaternion inverse of zero");
    return {w / n, -x / n, -y / n, -z / n};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

bool operator<(const Quaternion& a, const Quaternion& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

namespace {

void append_component(std::string& out, const mpq_class& v, const char* unit) {
    if (v == 0) return;
    mpz_class num = v.get_num();
    const mpz_class& den = v.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? "-" : "+";
    }
    if (*unit == '\0' || num != 1) out += num.get_str();
    out += unit;
    if (den != 1) out += "/" + den.get_str();
}

}  // namespace

std::string Quaternion::to_string() const {
    std::string out;
    append_component(out, w, "");
    append_component(out, x, "i");
    append_component(out, y, "j");
    append_component(out, z, "k");
    return out.empty() ? "0" : out;
}

}  // namespace ore
