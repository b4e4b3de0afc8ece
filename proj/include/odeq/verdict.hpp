#pragma once

namespace odeq {

// Outcome of a decision procedure. NotFoundOverQ marks a search restricted
// to rational constants that came back empty without a certificate.
enum class Verdict { Yes, CertifiedNo, NotFoundOverQ, Inconclusive, Unsupported };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "CertifiedYes";
    case Verdict::CertifiedNo: return "CertifiedNo";
    case Verdict::NotFoundOverQ: return "NotFoundOverQ";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Unsupported: return "Unsupported";
  }
  return "?";
}

}  // namespace odeq
