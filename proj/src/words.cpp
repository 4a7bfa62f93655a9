#include "daha/words.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace daha {

OpWord OpWord::inverse() const {
  OpWord r;
  r.scalar_vpow = -scalar_vpow;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back({it->g, -it->pw});
  return r;
}

OpWord operator*(const OpWord& a, const OpWord& b) {
  OpWord r = a;
  r.scalar_vpow += b.scalar_vpow;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

namespace {

// Substitutes each letter by its image (inverted for pw = -1); when
// `anti` is set the final letter sequence is reversed.
OpWord map_word(const OpWord& w, bool anti, bool flip_scalar,
                const std::function<OpWord(GenSym)>& image) {
  OpWord r;
  r.scalar_vpow = flip_scalar ? -w.scalar_vpow : w.scalar_vpow;
  std::vector<Letter> out;
  for (const auto& l : w.letters) {
    OpWord im = image(l.g);
    if (l.pw == -1) im = im.inverse();
    r.scalar_vpow += im.scalar_vpow;
    out.insert(out.end(), im.letters.begin(), im.letters.end());
  }
  if (anti) std::reverse(out.begin(), out.end());
  r.letters = std::move(out);
  return r;
}

}  // namespace

OpWord apply_a1_twist(A1Twist tw, const OpWord& w, int64_t q_vpow) {
  const int64_t h = q_vpow / 2;  // v-power of q^(1/2)
  switch (tw) {
    case A1Twist::TauR:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T);
          case GenSym::X: return OpWord::gen(GenSym::X);
          case GenSym::Y:
            return OpWord{h, {{GenSym::X, 1}, {GenSym::Y, 1}}};
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
    case A1Twist::TauRInv:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T);
          case GenSym::X: return OpWord::gen(GenSym::X);
          case GenSym::Y:
            return OpWord{-h, {{GenSym::X, -1}, {GenSym::Y, 1}}};
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
    case A1Twist::TauL:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T);
          case GenSym::Y: return OpWord::gen(GenSym::Y);
          case GenSym::X:
            return OpWord{-h, {{GenSym::Y, 1}, {GenSym::X, 1}}};
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
    case A1Twist::TauLInv:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T);
          case GenSym::Y: return OpWord::gen(GenSym::Y);
          case GenSym::X:
            return OpWord{h, {{GenSym::Y, -1}, {GenSym::X, 1}}};
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
    case A1Twist::Epsilon:
      // X <-> Y, T -> T^-1, (q,t) -> (q^-1,t^-1): q-monomial scalars flip.
      return map_word(w, false, true, [](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T, -1);
          case GenSym::X: return OpWord::gen(GenSym::Y);
          case GenSym::Y: return OpWord::gen(GenSym::X);
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
    case A1Twist::EpsilonPrime:
      return map_word(w, true, false, [](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T: return OpWord::gen(GenSym::T);
          case GenSym::X: return OpWord::gen(GenSym::Y, -1);
          case GenSym::Y: return OpWord::gen(GenSym::X, -1);
          default: throw std::logic_error("A1 twist on CC1 letter");
        }
      });
  }
  throw std::logic_error("apply_a1_twist");
}

OpWord apply_a1_twists(const std::vector<A1Twist>& tws, const OpWord& w,
                       int64_t q_vpow) {
  OpWord r = w;
  for (auto it = tws.rbegin(); it != tws.rend(); ++it)
    r = apply_a1_twist(*it, r, q_vpow);
  return r;
}

std::array<int, 4> cc1_param_perm(CC1Twist tw) {
  switch (tw) {
    case CC1Twist::SigmaR:
    case CC1Twist::SigmaRInv: return {2, 1, 0, 3};
    case CC1Twist::SigmaL:
    case CC1Twist::SigmaLInv: return {0, 1, 3, 2};
    case CC1Twist::EpsilonPrime: return {3, 1, 2, 0};
  }
  throw std::logic_error("cc1_param_perm");
}

namespace {

OpWord expand_xy(const OpWord& w) {
  OpWord r;
  r.scalar_vpow = w.scalar_vpow;
  for (const auto& l : w.letters) {
    OpWord im;
    switch (l.g) {
      case GenSym::X:  // (T1v T1)^-1
        im = OpWord{0, {{GenSym::T1, -1}, {GenSym::T1v, -1}}};
        break;
      case GenSym::Y:  // T1 T0
        im = OpWord{0, {{GenSym::T1, 1}, {GenSym::T0, 1}}};
        break;
      default:
        im = OpWord::gen(l.g);
    }
    if (l.pw == -1) im = im.inverse();
    r.letters.insert(r.letters.end(), im.letters.begin(), im.letters.end());
  }
  return r;
}

}  // namespace

OpWord apply_cc1_twist(CC1Twist tw, const OpWord& w_in) {
  OpWord w = expand_xy(w_in);
  auto id = [](GenSym g) { return OpWord::gen(g); };
  switch (tw) {
    case CC1Twist::SigmaR:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T0:
            return OpWord{0, {{GenSym::T0, 1}, {GenSym::T0v, 1}, {GenSym::T0, -1}}};
          case GenSym::T0v: return OpWord::gen(GenSym::T0);
          default: return id(g);
        }
      });
    case CC1Twist::SigmaRInv:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T0: return OpWord::gen(GenSym::T0v);
          case GenSym::T0v:
            return OpWord{0, {{GenSym::T0v, -1}, {GenSym::T0, 1}, {GenSym::T0v, 1}}};
          default: return id(g);
        }
      });
    case CC1Twist::SigmaL:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T0v: return OpWord::gen(GenSym::T1v);
          case GenSym::T1v:
            return OpWord{0, {{GenSym::T1v, -1}, {GenSym::T0v, 1}, {GenSym::T1v, 1}}};
          default: return id(g);
        }
      });
    case CC1Twist::SigmaLInv:
      return map_word(w, false, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T1v: return OpWord::gen(GenSym::T0v);
          case GenSym::T0v:
            return OpWord{0, {{GenSym::T0v, 1}, {GenSym::T1v, 1}, {GenSym::T0v, -1}}};
          default: return id(g);
        }
      });
    case CC1Twist::EpsilonPrime:
      return map_word(w, true, false, [&](GenSym g) -> OpWord {
        switch (g) {
          case GenSym::T0: return OpWord::gen(GenSym::T1v);
          case GenSym::T1v: return OpWord::gen(GenSym::T0);
          default: return id(g);
        }
      });
  }
  throw std::logic_error("apply_cc1_twist");
}

}  // namespace daha
