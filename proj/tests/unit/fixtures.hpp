#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "newton_implicit/geometry.hpp"

namespace fx {

inline const char* kFolium = "x=(3t^2)/(1+t^3); y=(3t)/(1+t^3)";
inline const char* kCircle = "x=(2t)/(1+t^2); y=(1-t^2)/(1+t^2)";
inline const char* kCircleDiff =
    R"({"class":"different_denominators","x":{"num":{"1":"2"},"den":{"0":"1","2":"1"}},)"
    R"("y":{"num":{"0":"1","2":"-1"},"den":{"0":"1","2":"1"}}})";
inline const char* kFiveVertex = "x=(t^6+2t^2)/(t^7+1); y=(t^4-t^3)/(t^7+1)";
inline const char* kFiveVertexFlipped = "x=(t^6-t^2)/(t^7+1); y=(t^4-t^3)/(t^7+1)";
inline const char* kRationalSame = "x=(2t^3+t+1)/(t^2+1); y=(t^4+t^3-1)/(t^2+1)";
inline const char* kPolyA = "x=2t^3-t+1; y=t^4-2t^2+3";
inline const char* kPolyB = "x=t+t^2; y=2t-t^2";
inline const char* kFroberg = "x=t^48-t^56-t^60-t^62-t^63; y=t^32";
inline const char* kBigDiff = "x=(t^7+t^4+t^3+t^2)/(t^3+1); y=(t^5+t^4+t)/(t^5+t^2+1)";
inline const char* kLaurent = "x=(a+t^2)/(c t); y=b/(d t)";
inline const char* kDAndrea = "x=(t^3+2t^2+t)/(t^2+3t-2); y=(t^3-t^2)/(t-2)";
inline const char* kIdentity = "x=t; y=t";

inline std::vector<ni::LatticePoint> sorted(std::vector<ni::LatticePoint> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<ni::LatticePoint> verts(const ni::LatticePolygon& p) { return sorted(p.vertices); }

}  // namespace fx
