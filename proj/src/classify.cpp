#include "qf/classify.hpp"

#include "qf/classgroup.hpp"
#include "qf/pell.hpp"
#include "qf/reduction.hpp"
#include "qf/valuesets.hpp"

namespace qf {

namespace {

Int check_nonsquare(const Form &f) {
  if (f.is_zero())
    throw domain_error("zero_form", "cannot classify the zero form");
  Int d = f.discriminant();
  if (d >= 0 && is_square(d))
    throw domain_error("square_discriminant",
                       "classification requires a non-square discriminant");
  return d;
}

long mod32(const Int &d) {
  Int r = d % 32;
  if (r < 0)
    r += 32;
  return r.get_si();
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Ordinary:
    return "Ordinary";
  case Verdict::LowerExtraordinary:
    return "LowerExtraordinary";
  case Verdict::UpperExtraordinary:
    return "UpperExtraordinary";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
  case Reason::LowerCriterion:
    return "d = 5 mod 8 and h+(d) = h+(4d)";
  case Reason::UpperCriterion:
    return "d = 20 mod 32 and h+(d) = h+(d/4)";
  case Reason::OneMod8:
    return "d = 1 mod 8";
  case Reason::LowerClassMismatch:
    return "d = 5 mod 8 but h+(d) != h+(4d)";
  case Reason::EvenResidueOrdinary:
    return "d mod 32 in {0,4,8,12,16,24,28}";
  case Reason::UpperClassMismatch:
    return "d = 20 mod 32 but h+(d) != h+(d/4)";
  }
  return "?";
}

Classification classify(const Form &f) {
  Int d = check_nonsquare(f);
  Int delta = f.content();
  Int dbar = d / (delta * delta);

  Classification cls;
  Certificate &cert = cls.certificate;
  cert.d = d;
  cert.content = delta;
  cert.d_reduced = dbar;
  cert.residue = mod32(dbar);

  long r32 = cert.residue;
  long r8 = r32 % 8;
  if (r8 == 5) {
    long h1 = class_data(dbar).h_plus;
    long h2 = class_data(4 * dbar).h_plus;
    cert.h_low = h1;
    cert.h_high = h2;
    if (dbar > 0)
      cert.unit_parity = unit_parity_criterion(dbar);
    if (h1 == h2) {
      cls.verdict = Verdict::LowerExtraordinary;
      cls.partner = dag(f);
      cert.reason = Reason::LowerCriterion;
    } else {
      cert.reason = Reason::LowerClassMismatch;
    }
  } else if (r8 == 1) {
    cert.reason = Reason::OneMod8;
  } else if (r32 == 20) {
    long h1 = class_data(dbar / 4).h_plus;
    long h2 = class_data(dbar).h_plus;
    cert.h_low = h1;
    cert.h_high = h2;
    if (h1 == h2) {
      cls.verdict = Verdict::UpperExtraordinary;
      cls.partner = upper_to_lower(f);
      cert.reason = Reason::UpperCriterion;
    } else {
      cert.reason = Reason::UpperClassMismatch;
    }
  } else {
    cert.reason = Reason::EvenResidueOrdinary;
  }
  return cls;
}

Form upper_to_lower(const Form &F) {
  Int d = check_nonsquare(F);
  Int delta = F.content();
  Form prim = F.divided_by(delta);
  Int dbar = prim.discriminant();
  bool neg = dbar < 0 && prim.a < 0;
  Form work = neg ? prim.negated() : prim;

  if (mod32(dbar) != 20)
    throw domain_error("criterion_fails",
                       "upper form requires d/Delta^2 = 20 mod 32");
  Int quarter = dbar / 4;
  if (class_data(dbar).h_plus != class_data(quarter).h_plus)
    throw domain_error("criterion_fails",
                       "upper form requires h+(d) = h+(d/4)");

  /* The dag map is a bijection between GL2 classes of the two
   * discriminants here, so some representative must match. */
  for (const Form &rep : class_data(quarter).reps) {
    if (is_gl2_equivalent(dag(rep), work)) {
      Form result = neg ? rep.negated() : rep;
      return result.scaled(delta);
    }
  }
  throw domain_error("internal_error",
                     "no lower partner found among class representatives");
}

std::string to_string(ValReason r) {
  switch (r) {
  case ValReason::EqualDiscEquivalent:
    return "equal discriminants, GL2-equivalent";
  case ValReason::EqualDiscInequivalent:
    return "equal discriminants, GL2-inequivalent";
  case ValReason::LowerUpperPair:
    return "associated lower/upper extraordinary pair";
  case ValReason::ContentMismatch:
    return "contents differ";
  case ValReason::SignMismatch:
    return "discriminant signs differ";
  case ValReason::DiscRatioBad:
    return "discriminant ratio not in {1, 4, 1/4}";
  case ValReason::NotFiveMod8:
    return "smaller discriminant not 5 mod 8";
  case ValReason::ClassNumberMismatch:
    return "h+(d) != h+(4d)";
  case ValReason::DagInequivalent:
    return "larger form not GL2-equivalent to the dag image";
  }
  return "?";
}

ValEquivResult val_equivalent(const Form &f, const Form &g) {
  check_nonsquare(f);
  check_nonsquare(g);
  if (f.content() != g.content())
    return {false, ValReason::ContentMismatch};
  Form fb = f.divided_by(f.content());
  Form gb = g.divided_by(g.content());
  Int d1 = fb.discriminant(), d2 = gb.discriminant();
  if ((d1 < 0) != (d2 < 0))
    return {false, ValReason::SignMismatch};
  if (d1 == d2) {
    if (is_gl2_equivalent(fb, gb))
      return {true, ValReason::EqualDiscEquivalent};
    return {false, ValReason::EqualDiscInequivalent};
  }
  const Form &lo = abs(d1) < abs(d2) ? fb : gb;
  const Form &hi = abs(d1) < abs(d2) ? gb : fb;
  Int dlo = lo.discriminant();
  if (hi.discriminant() != 4 * dlo)
    return {false, ValReason::DiscRatioBad};
  Int r = dlo % 8;
  if (r < 0)
    r += 8;
  if (r != 5)
    return {false, ValReason::NotFiveMod8};
  if (class_data(dlo).h_plus != class_data(4 * dlo).h_plus)
    return {false, ValReason::ClassNumberMismatch};
  if (!is_gl2_equivalent(dag(lo), hi))
    return {false, ValReason::DagInequivalent};
  return {true, ValReason::LowerUpperPair};
}

std::optional<Int> find_value_witness(const Form &f, const Form &g, long cap) {
  auto in_image = [](const Form &h, const Int &n) {
    Int c = h.content();
    if (n % c != 0)
      return false;
    return represents_exact(h.divided_by(c), n / c).represented;
  };
  for (long v = 1; v <= cap; v++) {
    for (long sign : {1, -1}) {
      Int n(sign * v);
      if (in_image(f, n) != in_image(g, n))
        return n;
    }
  }
  return std::nullopt;
}

} // namespace qf
