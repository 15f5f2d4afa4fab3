#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qlie/error.hpp"

namespace qlie {

// Element of Z[I] over the ordered vertex set of a graph. Roots and
// dimension vectors share this type.
struct DimVector {
    std::vector<int> c;

    DimVector() = default;
    explicit DimVector(int n) : c(n, 0) {}
    DimVector(std::initializer_list<int> v) : c(v) {}

    static DimVector unit(int n, int i) {
        DimVector d(n);
        d.c[i] = 1;
        return d;
    }

    int size() const { return (int)c.size(); }
    int operator[](int i) const { return c[i]; }
    int& operator[](int i) { return c[i]; }

    int height() const { return std::accumulate(c.begin(), c.end(), 0); }

    bool is_zero() const {
        for (int v : c)
            if (v != 0) return false;
        return true;
    }
    bool nonnegative() const {
        for (int v : c)
            if (v < 0) return false;
        return true;
    }

    friend DimVector operator+(const DimVector& a, const DimVector& b) {
        DimVector r = a;
        for (int i = 0; i < r.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend DimVector operator-(const DimVector& a, const DimVector& b) {
        DimVector r = a;
        for (int i = 0; i < r.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    DimVector scaled(int k) const {
        DimVector r = *this;
        for (int& v : r.c) v *= k;
        return r;
    }
    DimVector negated() const { return scaled(-1); }

    friend bool operator==(const DimVector& a, const DimVector& b) { return a.c == b.c; }
    friend bool operator!=(const DimVector& a, const DimVector& b) { return a.c != b.c; }

    // Canonical order: height first, then coordinatewise lexicographic.
    friend bool operator<(const DimVector& a, const DimVector& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c < b.c;
    }

    // componentwise a <= b
    friend bool leq(const DimVector& a, const DimVector& b) {
        for (int i = 0; i < a.size(); ++i)
            if (a.c[i] > b.c[i]) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        return s;
    }

    static DimVector parse(const std::string& s, int expected_size) {
        DimVector d;
        std::string cur;
        for (char ch : s + ",") {
            if (ch == ',') {
                if (cur.empty()) throw input_error("bad dimension vector: '" + s + "'");
                d.c.push_back(std::stoi(cur));
                cur.clear();
            } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
                cur += ch;
            } else if (ch != ' ') {
                throw input_error("bad dimension vector: '" + s + "'");
            }
        }
        if (expected_size >= 0 && d.size() != expected_size)
            throw input_error("dimension vector '" + s + "' has " + std::to_string(d.size()) +
                              " coordinates, expected " + std::to_string(expected_size));
        return d;
    }
};

} // namespace qlie
