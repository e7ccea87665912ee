#pragma once

#include <stdexcept>

namespace polarsec {

bool is_prime(int n) noexcept;

// Symbol alphabet {0, ..., q-1} with addition mod a prime q.
// Symbols are canonical integers; out-of-range arguments throw.
class Alphabet {
public:
    explicit Alphabet(int q);

    int q() const noexcept { return q_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const;

private:
    int checked(int a) const;

    int q_;
};

}  // namespace polarsec
