#pragma once

#include "ragprobe/error.hpp"

namespace ragprobe {

// Opinion polarity of a passage or answer: 0 oppose, 1 neutral, 2 support.
enum class Stance : int {
    Oppose = 0,
    Neutral = 1,
    Support = 2,
};

inline int stance_value(Stance s) { return static_cast<int>(s); }

inline Stance stance_from_int(int v) {
    if (v < 0 || v > 2) {
        throw Error("stance value out of range: " + std::to_string(v));
    }
    return static_cast<Stance>(v);
}

inline const char* stance_name(Stance s) {
    switch (s) {
        case Stance::Oppose: return "oppose";
        case Stance::Neutral: return "neutral";
        case Stance::Support: return "support";
    }
    return "?";
}

}  // namespace ragprobe
