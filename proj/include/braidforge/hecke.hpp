#pragma once

#include "braidforge/braidword.hpp"
#include "braidforge/laurent.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace bf {

struct YoungDiagram {
    std::vector<int> parts; // weakly decreasing, positive

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> p);

    int size() const;
    YoungDiagram transpose() const;
    std::vector<int> hooks() const;
    int content_sum() const;
    Int dim() const; // hook length formula
    bool is_hook() const;
    int first_row() const { return parts.empty() ? 0 : parts[0]; }

    auto operator<=>(const YoungDiagram&) const = default;
};

std::string to_string(const YoungDiagram& y);
// all partitions of n, ascending lexicographic order: (1,...,1) first, (n) last
std::vector<YoungDiagram> partitions(int n);

struct WeightEntry {
    YoungDiagram Y;
    std::vector<Poly> W; // W[j] = lambda^j coefficient, a polynomial in q
    Int d = 0;           // dim pi_Y
    int e = 0;           // full twist acts by q^e
};

// Weights normalized so that
//   X = (-1)^(n-1) lambda^((e-n+1)/2) sum_Y W_Y(q,lambda) tr pi_Y / prod_{i=2..n} (1 - q^i)
std::vector<WeightEntry> weight_table(int n);
Poly hecke_denominator(int n);

// tr pi_Y(w) for |Y| = w.strands <= 4, as a polynomial in q
Poly hecke_trace(const YoungDiagram& Y, const BraidWord& w);

// X given by lambda-coefficients -> P(v, z); exact, throws on non-cancelling denominators
template <class T>
Poly2 x_to_p(int n, int e, const std::vector<LaurentPoly<T>>& N, const LaurentPoly<T>& den);

Poly2 skein4(const BraidWord& w);
// P -> X(q, lambda) in doubled exponents; only for P without negative z powers
Poly2 x_from_p(const Poly2& P);

class HomflyOracle {
public:
    explicit HomflyOracle(int budget = 16) : budget_(budget) {}
    Poly2 operator()(const BraidWord& w);
    size_t memo_size() const { return memo_.size(); }

private:
    Poly2 eval(int n, std::vector<int> letters);
    Poly2 descend(int n, const std::vector<int>& letters);

    int budget_;
    std::map<std::pair<int, std::vector<int>>, Poly2> memo_;
};

Poly2 homfly_oracle(const BraidWord& w, int budget = 16);
Poly2 unknot_delta(); // (1/v - v)/z

int mwf_bound(const Poly2& P);

// ---- six strands: the beta_{k,l} family ----

// Z * c(i,Y) = base + param * Z * c6, where c6 is the undetermined entry of the (3,2,1) column
struct CiyEntry {
    QPoly base;
    int param = 0;
};

struct B6Tables {
    std::vector<YoungDiagram> Y;           // ascending lex order
    std::array<Poly, 7> delta;             // eigenvalues of [2132]
    std::vector<std::array<int, 7>> M;     // eigenvalue multiplicities per Y
    std::vector<std::array<CiyEntry, 7>> zc;
    Poly Z;                                // (1+q)(1+q^2)(1+q+q^2)
    std::vector<Int> d;
    std::vector<int> r;
    std::vector<int> e;
};

const B6Tables& b6_tables();
const std::vector<WeightEntry>& b6_weights();

// [4354] [2132]^k (full twist)^l
BraidWord beta_kl(int k, int l);

// Z * sum_i c(i,Y) - Z * sum_i M(i,Y) delta_i, for each Y (must vanish, parameter included)
std::vector<QPoly> trace_identity_residuals();

// Z * tr pi_Y(beta_{k,l}) from the tables, with c6 set to the given value
QPoly b6_trace(size_t y, int k, int l, const QPoly& c6 = QPoly());
// P of the closure of beta_{k,l} through the tables
Poly2 b6_skein(int k, int l, const QPoly& c6 = QPoly());
// grouped Z-cleared coefficient of lambda^m for gamma_a = beta_{6a-1,-2a}
QPoly b6_coefficient(int a, int m);
// number of nonzero grouped coefficients (i != 4, 7)
int b6_nonzero_grouped();

struct OneHookReport {
    int k = 0;
    bool ok = true;
    std::vector<std::string> mismatches;
};
OneHookReport verify_onehook_traces(int k);

} // namespace bf
