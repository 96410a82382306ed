#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "newton_implicit/poly.hpp"

namespace ni {

enum class CurveClass { Polynomial, SameDenominator, DifferentDenominators };

const char* class_name(CurveClass c);  // "polynomial", "same_denominator", ...
CurveClass class_from_name(const std::string& s);

// Strictly increasing exponent list.
using Support = std::vector<int>;

Support support_of(const SparsePoly& p);
Support support_union(const Support& a, const Support& b);

// x = P0/Q0, y = P1/Q1. Polynomial curves carry Q0 = Q1 = 1; same-denominator
// curves carry Q0 == Q1.
struct ParametricCurve {
    CurveClass cls = CurveClass::Polynomial;
    SparsePoly P0, P1, Q0, Q1;
    // Coefficients are placeholders; only the supports carry meaning.
    bool supports_only = false;

    const SparsePoly& num(int i) const { return i == 0 ? P0 : P1; }
    const SparsePoly& den(int i) const { return i == 0 ? Q0 : Q1; }
};

bool operator==(const ParametricCurve& a, const ParametricCurve& b);

// Accepts a JSON document or shorthand "x=...; y=...".
ParametricCurve parse_curve(const std::string& text);
ParametricCurve parse_shorthand(const std::string& text);
ParametricCurve parse_curve_json(const std::string& text);
std::string curve_to_json(const ParametricCurve& c);
std::string curve_to_string(const ParametricCurve& c);

ParametricCurve normalize(const ParametricCurve& c);

enum class CaseTag { None, A1, A2, B2, B3 };
const char* case_name(CaseTag t);  // "1A", "2A", "2B", "3B"

struct Classification {
    CaseTag tag = CaseTag::None;
    int i = 0, j = 1, k = 2;
    // Matched on the reversed segments b -> u - b (parameter t -> 1/t).
    bool reversed = false;
};

struct SameDenomData {
    std::array<Support, 3> B;
    std::array<int, 3> bL{}, bR{};
    int u = 0;
    Classification cls;

    static SameDenomData from_supports(const Support& B0, const Support& B1, const Support& B2);
    // 0 lies in B2, or in both B0 and B1.
    bool origin_condition() const;
    SameDenomData reversed() const;
};

SameDenomData derive_same_denom(const ParametricCurve& c);
Classification classify_same_denom(const SameDenomData& d);

enum class SelectionKind { Selection1, Selection2 };

struct DiffDenomData {
    Support A0, A1;
    // Supports of the numerators and denominators behind each A_i.
    Support P0, Q0, P1, Q1;

    const Support& A(int i) const { return i == 0 ? A0 : A1; }
};

DiffDenomData derive_diff_denom(const ParametricCurve& c);
DiffDenomData diff_denom_from_supports(const Support& P0, const Support& Q0, const Support& P1, const Support& Q1);

struct Selection {
    SelectionKind kind = SelectionKind::Selection1;
    Support A0, A1;
    // selected[i][p] is true iff the p-th point of A_i is selected.
    std::array<std::vector<bool>, 2> selected;

    const Support& A(int i) const { return i == 0 ? A0 : A1; }
    bool is_selected(int i, int exponent) const;
    // Indicator of a selected point.
    int chi(int i, int exponent) const { return is_selected(i, exponent) ? 1 : 0; }
    // Indicator that A_i has a non-selected point.
    int chi_nonselected(int i) const;
    bool any_selected(int i) const;
    std::optional<int> leftmost(int i, bool sel) const;
    std::optional<int> rightmost(int i, bool sel) const;
    Support selected_set(int i) const;
    // e.g. "{0+,2-,3+}"
    std::string describe(int i) const;
};

Selection make_selection(const DiffDenomData& d, SelectionKind kind);
// Selection with the given selected sets on the supports of d.
Selection custom_selection(const DiffDenomData& d, const Support& sel0, const Support& sel1, SelectionKind kind);

}  // namespace ni
