#include "causal/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

#include "causal/paths.hpp"

namespace causal::corpus {

namespace {

Fixture forest_fire_disjunctive() {
  Fixture f;
  f.name = "forest_fire_disjunctive";
  f.model_text = R"(model forest_fire_disjunctive {
  exo U_L: {0, 1}
  exo U_MD: {0, 1}
  endo L: {0, 1}
  endo MD: {0, 1}
  endo F: {0, 1}
  L = U_L
  MD = U_MD
  F = max(L, MD)
}
)";
  f.context_text = "(U_L=1, U_MD=1)";
  const std::string ctx = " in (U_L=1, U_MD=1) using ";
  f.checks = {
      {"cause? L=1 of F=1" + ctx + "butfor", false, {},
       "either source alone keeps the fire burning"},
      {"cause? L=1 of F=1" + ctx + "original", true, {},
       "contingency MD=0 makes the lightning decisive"},
      {"cause? L=1 of F=1" + ctx + "updated", true, {},
       "same contingency survives the subset quantifier"},
      {"cause? L=1 of F=1" + ctx + "modified", false, {},
       "freezing MD at its actual 1 keeps the fire lit"},
      {"cause? MD=1 of F=1" + ctx + "original", true, {}, "symmetric to the lightning"},
      {"cause? MD=1 of F=1" + ctx + "updated", true, {}, "symmetric to the lightning"},
      {"cause? MD=1 of F=1" + ctx + "modified", false, {}, "symmetric to the lightning"},
      {"cause? L=1 & MD=1 of F=1" + ctx + "modified", true, {},
       "flipping both sources at once is the only way to put the fire out"},
      {"partof? L=1 of F=1" + ctx + "modified", true, {},
       "conjunct of the two-event modified cause"},
      {"partof? MD=1 of F=1" + ctx + "modified", true, {},
       "conjunct of the two-event modified cause"},
      {"causes? F=1" + ctx + "modified maxsize 2", false, {"L=1 & MD=1"},
       "exhaustive enumeration: the pair is the unique modified cause"},
  };
  return f;
}

Fixture forest_fire_conjunctive() {
  Fixture f;
  f.name = "forest_fire_conjunctive";
  f.model_text = R"(model forest_fire_conjunctive {
  exo U_L: {0, 1}
  exo U_MD: {0, 1}
  endo L: {0, 1}
  endo MD: {0, 1}
  endo F: {0, 1}
  L = U_L
  MD = U_MD
  F = min(L, MD)
}
)";
  f.context_text = "(U_L=1, U_MD=1)";
  const std::string ctx = " in (U_L=1, U_MD=1) using ";
  f.checks = {
      {"cause? L=1 of F=1" + ctx + "butfor", true, {}, "both sources are needed"},
      {"cause? L=1 of F=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? L=1 of F=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? L=1 of F=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? MD=1 of F=1" + ctx + "butfor", true, {}, "both sources are needed"},
      {"cause? MD=1 of F=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? MD=1 of F=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? MD=1 of F=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"causes? F=1" + ctx + "modified maxsize 2", false, {"L=1", "MD=1"},
       "each source is a minimal cause on its own"},
  };
  return f;
}

Fixture rock_throwing() {
  Fixture f;
  f.name = "rock_throwing";
  f.model_text = R"(model rock_throwing {
  exo U_ST: {0, 1}
  exo U_BT: {0, 1}
  endo ST: {0, 1}
  endo BT: {0, 1}
  endo SH: {0, 1}
  endo BH: {0, 1}
  endo BS: {0, 1}
  ST = U_ST
  BT = U_BT
  SH = ST
  BH = BT & !SH
  BS = SH | BH
}
)";
  f.context_text = "(U_ST=1, U_BT=1)";
  const std::string ctx = " in (U_ST=1, U_BT=1) using ";
  f.checks = {
      {"cause? ST=1 of BS=1" + ctx + "butfor", false, {},
       "the second thrower would have hit"},
      {"cause? ST=1 of BS=1" + ctx + "original", true, {},
       "contingency where the second thrower stays out"},
      {"cause? ST=1 of BS=1" + ctx + "updated", true, {},
       "same contingency passes the stronger sufficiency"},
      {"cause? ST=1 of BS=1" + ctx + "modified", true, {},
       "holding BH at its actual 0, no throw means no shatter"},
      {"cause? BT=1 of BS=1" + ctx + "original", false, {},
       "every partition fails sufficiency via BH at its actual value"},
      {"cause? BT=1 of BS=1" + ctx + "updated", false, {},
       "every partition fails sufficiency via BH at its actual value"},
      {"cause? BT=1 of BS=1" + ctx + "modified", false, {},
       "the bottle shatters no matter what the second thrower does"},
      {"cause? ST=1 of BS=1" + ctx + "hitchcock", true, {},
       "verified by brute-force oracle: but-for along the direct path with BH frozen"},
      {"cause? ST=1 of BS=1" + ctx + "haccount", true, {},
       "verified by brute-force oracle: off-path contingency preserves the hit path"},
  };
  return f;
}

Fixture prisoner() {
  Fixture f;
  f.name = "prisoner";
  f.model_text = R"(model prisoner {
  exo U_A: {0, 1}
  exo U_B: {0, 1}
  exo U_C: {0, 1}
  endo A: {0, 1}
  endo B: {0, 1}
  endo C: {0, 1}
  endo D: {0, 1}
  A = U_A
  B = U_B
  C = U_C
  D = (A & B) | C
}
)";
  f.context_text = "(U_A=1, U_B=0, U_C=1)";
  const std::string ctx = " in (U_A=1, U_B=0, U_C=1) using ";
  f.checks = {
      {"cause? A=1 of D=1" + ctx + "original", true, {},
       "contingency B=1, C=0 passes AC2(a) and AC2(b)"},
      {"cause? A=1 of D=1" + ctx + "updated", false, {},
       "leaving B unset while C=0 falsifies the effect"},
      {"cause? A=1 of D=1" + ctx + "modified", false, {},
       "with B frozen at its actual 0 the load never matters"},
      {"cause? C=1 of D=1" + ctx + "butfor", true, {}, "the second gun did the work"},
      {"cause? C=1 of D=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? C=1 of D=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? C=1 of D=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
  };
  return f;
}

Fixture bogus_prevention() {
  Fixture f;
  f.name = "bogus_prevention";
  f.model_text = R"(model bogus_prevention {
  exo U_Poison: {0, 1}
  exo U_Antidote: {0, 1}
  endo Poison: {0, 1}
  endo Antidote: {0, 1}
  endo Survives: {0, 1}
  Poison = U_Poison
  Antidote = U_Antidote
  Survives = !Poison | Antidote
}
)";
  f.context_text = "(U_Poison=0, U_Antidote=1)";
  const std::string ctx = " in (U_Poison=0, U_Antidote=1) using ";
  f.checks = {
      {"cause? Antidote=1 of Survives=1" + ctx + "original", true, {},
       "contingency where the poison goes in"},
      {"cause? Antidote=1 of Survives=1" + ctx + "updated", true, {},
       "the same contingency passes the subset quantifier"},
      {"cause? Antidote=1 of Survives=1" + ctx + "modified", false, {},
       "with the poison frozen at its actual 0, survival never depends on the antidote"},
      {"partof? Antidote=1 of Survives=1" + ctx + "modified", true, {},
       "antidote plus absent poison together form a cause"},
      {"cause? Antidote=1 & Poison=0 of Survives=1" + ctx + "modified", true, {},
       "flipping both at once kills the victim"},
  };
  return f;
}

Fixture weslake_lamp() {
  Fixture f;
  f.name = "weslake_lamp";
  f.model_text = R"(model weslake_lamp {
  exo U_A: {-1, 0, 1}
  exo U_B: {-1, 0, 1}
  exo U_C: {-1, 0, 1}
  endo A: {-1, 0, 1}
  endo B: {-1, 0, 1}
  endo C: {-1, 0, 1}
  endo L: {0, 1}
  A = U_A
  B = U_B
  C = U_C
  L = (A = B) | (B = C) | (A = C)
}
)";
  f.context_text = "(U_A=1, U_B=-1, U_C=-1)";
  const std::string ctx = " in (U_A=1, U_B=-1, U_C=-1) using ";
  f.checks = {
      {"cause? A=1 of L=1" + ctx + "original", true, {},
       "contingency B=1, C=-1 makes switch A decisive"},
      {"cause? A=1 of L=1" + ctx + "updated", true, {}, "the same contingency passes"},
      {"cause? A=1 of L=1" + ctx + "modified", false, {},
       "no freeze of actual values makes the odd switch matter"},
      {"cause? B=-1 of L=1" + ctx + "butfor", true, {}, "moving B breaks the only match"},
      {"cause? B=-1 of L=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? B=-1 of L=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? B=-1 of L=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? C=-1 of L=1" + ctx + "original", true, {}, "symmetric to B"},
      {"cause? C=-1 of L=1" + ctx + "updated", true, {}, "symmetric to B"},
      {"cause? C=-1 of L=1" + ctx + "modified", true, {}, "symmetric to B"},
  };
  return f;
}

Fixture fire_redux() {
  Fixture f;
  f.name = "fire_redux";
  f.model_text = R"(model fire_redux {
  exo U_L: {0, 1}
  exo U_MD: {0, 1}
  endo L: {0, 1}
  endo MD: {0, 1}
  endo A: {0, 1}
  endo B: {0, 1}
  endo C: {0, 1}
  endo F: {0, 1}
  L = U_L
  MD = U_MD
  A = L & !MD
  B = !L & MD
  C = L & MD
  F = A | B | C
}
)";
  f.context_text = "(U_L=1, U_MD=1)";
  const std::string ctx = " in (U_L=1, U_MD=1) using ";
  f.checks = {
      {"cause? L=1 of F=1" + ctx + "original", true, {}, "mechanism variables expose the route"},
      {"cause? L=1 of F=1" + ctx + "updated", true, {}, "mechanism variables expose the route"},
      {"cause? L=1 of F=1" + ctx + "modified", true, {},
       "freezing the inactive mechanisms at 0 makes the lightning decisive"},
      {"cause? MD=1 of F=1" + ctx + "original", true, {}, "symmetric to the lightning"},
      {"cause? MD=1 of F=1" + ctx + "modified", true, {}, "symmetric to the lightning"},
      {"causes? F=1" + ctx + "modified maxsize 1", false, {"C=1", "L=1", "MD=1"},
       "verified by brute-force oracle: the active mechanism and both sources"},
  };
  return f;
}

Fixture fire_redux_single_b() {
  Fixture f;
  f.name = "fire_redux_single_b";
  f.model_text = R"(model fire_redux_single_b {
  exo U_L: {0, 1}
  exo U_MD: {0, 1}
  endo L: {0, 1}
  endo MD: {0, 1}
  endo B: {0, 1}
  endo F: {0, 1}
  L = U_L
  MD = U_MD
  B = !L & MD
  F = L | B
}
)";
  f.context_text = "(U_L=1, U_MD=1)";
  const std::string ctx = " in (U_L=1, U_MD=1) using ";
  f.checks = {
      {"cause? L=1 of F=1" + ctx + "butfor", false, {},
       "without the lightning the backup mechanism ignites the fire instead"},
      {"cause? L=1 of F=1" + ctx + "original", true, {},
       "freezing the backup mechanism at its actual 0 makes the lightning decisive"},
      {"cause? L=1 of F=1" + ctx + "updated", true, {}, "the same freeze passes"},
      {"cause? L=1 of F=1" + ctx + "modified", true, {}, "the same freeze passes"},
      {"cause? MD=1 of F=1" + ctx + "original", false, {},
       "restoring B to its actual 0 always falsifies the effect"},
      {"cause? MD=1 of F=1" + ctx + "updated", false, {}, "as for the original variant"},
      {"cause? MD=1 of F=1" + ctx + "modified", false, {},
       "the match has no impact once actual values are held"},
      {"partof? MD=1 of F=1" + ctx + "modified", false, {},
       "the match does not even appear inside a larger cause"},
  };
  return f;
}

Fixture glymour_base() {
  Fixture f;
  f.name = "ranch_vote";
  f.model_text = R"(model ranch_vote {
  exo U_1: {0, 1}
  exo U_2: {0, 1}
  exo U_3: {0, 1}
  exo U_4: {0, 1}
  exo U_5: {0, 1}
  endo A_1: {0, 1}
  endo A_2: {0, 1}
  endo A_3: {0, 1}
  endo A_4: {0, 1}
  endo A_5: {0, 1}
  endo O: {0, 1}
  A_1 = U_1
  A_2 = U_2
  A_3 = U_3
  A_4 = U_4
  A_5 = U_5
  O = if A_1 = A_2 then A_1 else if (A_2 = A_3) & (A_3 = A_4) & (A_4 = A_5) then A_1 else (A_1 + A_2 + A_3 + A_4 + A_5) >= 3
}
)";
  f.context_text = "(U_1=1, U_2=1, U_3=0, U_4=0, U_5=0)";
  const std::string ctx = " in (U_1=1, U_2=1, U_3=0, U_4=0, U_5=0) using ";
  f.checks = {
      {"cause? A_1=1 of O=1" + ctx + "butfor", true, {},
       "changing the first vote changes the outcome through every rule"},
      {"cause? A_1=1 of O=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? A_1=1 of O=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? A_1=1 of O=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? A_2=1 of O=1" + ctx + "original", true, {},
       "contingency A_3=1 makes the second vote pivotal"},
      {"cause? A_2=1 of O=1" + ctx + "updated", true, {}, "the same contingency passes"},
      {"cause? A_2=1 of O=1" + ctx + "modified", false, {},
       "with the others at their actual votes the agreement rule decides"},
      {"cause? A_3=0 of O=1" + ctx + "original", true, {},
       "contingency A_2=0 routes the outcome through the dissent rule"},
      {"cause? A_3=0 of O=1" + ctx + "updated", true, {}, "the same contingency passes"},
      {"cause? A_3=0 of O=1" + ctx + "modified", false, {},
       "frozen actual votes leave rule one in charge"},
      {"cause? A_4=0 of O=1" + ctx + "original", true, {}, "symmetric to A_3"},
      {"cause? A_4=0 of O=1" + ctx + "updated", true, {}, "symmetric to A_3"},
      {"cause? A_4=0 of O=1" + ctx + "modified", false, {}, "symmetric to A_3"},
      {"cause? A_5=0 of O=1" + ctx + "original", true, {}, "symmetric to A_3"},
      {"cause? A_5=0 of O=1" + ctx + "updated", true, {}, "symmetric to A_3"},
      {"cause? A_5=0 of O=1" + ctx + "modified", false, {}, "symmetric to A_3"},
  };
  return f;
}

Fixture glymour_extended() {
  Fixture f;
  f.name = "ranch_vote_mechanisms";
  f.model_text = R"(model ranch_vote_mechanisms {
  exo U_1: {0, 1}
  exo U_2: {0, 1}
  exo U_3: {0, 1}
  exo U_4: {0, 1}
  exo U_5: {0, 1}
  endo A_1: {0, 1}
  endo A_2: {0, 1}
  endo A_3: {0, 1}
  endo A_4: {0, 1}
  endo A_5: {0, 1}
  endo M_1: {0, 1, 2}
  endo M_2: {0, 1, 2}
  endo M_3: {0, 1}
  endo O: {0, 1}
  A_1 = U_1
  A_2 = U_2
  A_3 = U_3
  A_4 = U_4
  A_5 = U_5
  M_1 = if A_1 = A_2 then A_1 else 2
  M_2 = if (A_2 = A_3) & (A_3 = A_4) & (A_4 = A_5) & (A_1 != A_2) then A_1 else 2
  M_3 = (A_1 + A_2 + A_3 + A_4 + A_5) >= 3
  O = if M_1 != 2 then M_1 else if M_2 != 2 then M_2 else M_3
}
)";
  f.context_text = "(U_1=1, U_2=1, U_3=0, U_4=0, U_5=0)";
  const std::string ctx = " in (U_1=1, U_2=1, U_3=0, U_4=0, U_5=0) using ";
  f.checks = {
      {"cause? A_1=1 of O=1" + ctx + "original", true, {}, "still a but-for cause"},
      {"cause? A_1=1 of O=1" + ctx + "updated", true, {}, "still a but-for cause"},
      {"cause? A_1=1 of O=1" + ctx + "modified", true, {}, "still a but-for cause"},
      {"cause? A_2=1 of O=1" + ctx + "original", true, {},
       "the agreement mechanism carried the outcome"},
      {"cause? A_2=1 of O=1" + ctx + "updated", true, {},
       "the agreement mechanism carried the outcome"},
      {"cause? A_2=1 of O=1" + ctx + "modified", true, {},
       "freezing the inactive mechanisms exposes the second vote"},
  };
  return f;
}

Fixture livengood_votes() {
  Fixture f;
  f.name = "plurality_vote";
  f.model_text = R"(model plurality_vote {
  exo U_1: {A, B, C}
  exo U_2: {A, B, C}
  exo U_3: {A, B, C}
  exo U_4: {A, B, C}
  exo U_5: {A, B, C}
  exo U_6: {A, B, C}
  exo U_7: {A, B, C}
  endo V1: {A, B, C}
  endo V2: {A, B, C}
  endo V3: {A, B, C}
  endo V4: {A, B, C}
  endo V5: {A, B, C}
  endo V6: {A, B, C}
  endo V7: {A, B, C}
  endo O: {A, B, C, tie}
  V1 = U_1
  V2 = U_2
  V3 = U_3
  V4 = U_4
  V5 = U_5
  V6 = U_6
  V7 = U_7
  O = if (((V1 = A) + (V2 = A) + (V3 = A) + (V4 = A) + (V5 = A) + (V6 = A) + (V7 = A)) > ((V1 = B) + (V2 = B) + (V3 = B) + (V4 = B) + (V5 = B) + (V6 = B) + (V7 = B))) & (((V1 = A) + (V2 = A) + (V3 = A) + (V4 = A) + (V5 = A) + (V6 = A) + (V7 = A)) > ((V1 = C) + (V2 = C) + (V3 = C) + (V4 = C) + (V5 = C) + (V6 = C) + (V7 = C))) then A else if (((V1 = B) + (V2 = B) + (V3 = B) + (V4 = B) + (V5 = B) + (V6 = B) + (V7 = B)) > ((V1 = A) + (V2 = A) + (V3 = A) + (V4 = A) + (V5 = A) + (V6 = A) + (V7 = A))) & (((V1 = B) + (V2 = B) + (V3 = B) + (V4 = B) + (V5 = B) + (V6 = B) + (V7 = B)) > ((V1 = C) + (V2 = C) + (V3 = C) + (V4 = C) + (V5 = C) + (V6 = C) + (V7 = C))) then B else if (((V1 = C) + (V2 = C) + (V3 = C) + (V4 = C) + (V5 = C) + (V6 = C) + (V7 = C)) > ((V1 = A) + (V2 = A) + (V3 = A) + (V4 = A) + (V5 = A) + (V6 = A) + (V7 = A))) & (((V1 = C) + (V2 = C) + (V3 = C) + (V4 = C) + (V5 = C) + (V6 = C) + (V7 = C)) > ((V1 = B) + (V2 = B) + (V3 = B) + (V4 = B) + (V5 = B) + (V6 = B) + (V7 = B))) then C else tie
}
)";
  f.context_text = "(U_1=A, U_2=A, U_3=A, U_4=A, U_5=A, U_6=B, U_7=B)";
  const std::string ctx = " in (U_1=A, U_2=A, U_3=A, U_4=A, U_5=A, U_6=B, U_7=B) using ";
  f.checks = {
      {"cause? V6=B of O=A" + ctx + "modified", false, {},
       "re-voting one opposition ballot can never overturn a 5-2 margin"},
      {"cause? V6=B of O=A" + ctx + "original", true, {},
       "with two supporters moved to the third option the opposition ballot becomes pivotal"},
      {"cause? V6=B of O=A" + ctx + "updated", true, {},
       "the same contingency survives every subset"},
      {"cause? V1=A of O=A" + ctx + "original", true, {},
       "a single supporter is pivotal once another supporter defects"},
      {"cause? V1=A of O=A" + ctx + "modified", false, {},
       "one supporter alone cannot flip the outcome with the rest frozen"},
      {"cause? V1=A & V2=A of O=A" + ctx + "modified", true, {},
       "verified by brute-force oracle: two supporters re-voting flip the plurality"},
      {"partof? V1=A of O=A" + ctx + "modified", true, {},
       "member of a minimal two-supporter cause"},
  };
  return f;
}

Fixture train_switch() {
  Fixture f;
  f.name = "train_switch";
  f.model_text = R"(model train_switch {
  exo U_F: {0, 1}
  exo U_LB: {0, 1}
  exo U_RB: {0, 1}
  endo F: {0, 1}
  endo LB: {0, 1}
  endo RB: {0, 1}
  endo A: {0, 1}
  F = U_F
  LB = U_LB
  RB = U_RB
  A = (F & !RB) | (!F & !LB)
}
)";
  f.context_text = "(U_F=1, U_LB=0, U_RB=0)";
  f.checks = {
      {"cause? F=1 of A=1 in (U_F=1, U_LB=0, U_RB=0) using modified", false, {},
       "with both tracks clear the flip never matters under actual values"},
      {"cause? F=1 of A=1 in (U_F=1, U_LB=0, U_RB=0) using original", true, {},
       "contingency where the left track is blocked"},
      {"cause? F=1 of A=0 in (U_F=1, U_LB=1, U_RB=1) using modified", false, {},
       "with both tracks blocked the flip never matters under actual values"},
      {"cause? F=1 of A=0 in (U_F=1, U_LB=1, U_RB=1) using original", true, {},
       "contingency where the left track is clear"},
  };
  return f;
}

Fixture train_switch_tracks() {
  Fixture f;
  f.name = "train_switch_tracks";
  f.model_text = R"(model train_switch_tracks {
  exo U_F: {0, 1}
  endo F: {0, 1}
  endo LT: {0, 1}
  endo RT: {0, 1}
  endo A: {0, 1}
  F = U_F
  LT = !F
  RT = F
  A = LT | RT
}
)";
  f.context_text = "(U_F=1)";
  const std::string ctx = " in (U_F=1) using ";
  f.checks = {
      {"cause? F=1 of A=1" + ctx + "modified", true, {},
       "freezing the untravelled track at 0 makes the flip a but-for cause"},
      {"cause? F=1 of A=1" + ctx + "original", true, {}, "the same freeze works"},
      {"cause? F=1 of A=1" + ctx + "updated", true, {}, "the same freeze works"},
  };
  return f;
}

Fixture voting_machine() {
  Fixture f;
  f.name = "voting_machine";
  f.model_text = R"(model voting_machine {
  exo U_1: {0, 1}
  exo U_2: {0, 1}
  endo V1: {0, 1}
  endo V2: {0, 1}
  endo M: {0, 1, 2}
  endo P: {0, 1}
  V1 = U_1
  V2 = U_2
  M = V1 + V2
  P = M >= 1
}
)";
  f.context_text = "(U_1=1, U_2=1)";
  const std::string ctx = " in (U_1=1, U_2=1) using ";
  f.checks = {
      {"cause? V1=1 of P=1" + ctx + "haccount", false, {},
       "any contingency that removes the other vote disturbs the tally on the path"},
      {"cause? V1=1 of P=1" + ctx + "original", true, {},
       "with the other vote withdrawn this one is pivotal"},
      {"cause? V1=1 of P=1" + ctx + "updated", true, {}, "the same contingency passes"},
      {"cause? V1=1 of P=1" + ctx + "modified", false, {},
       "the measure passes regardless once actual values are frozen"},
      {"partof? V1=1 of P=1" + ctx + "modified", true, {},
       "both votes together form the modified cause"},
      {"cause? V1=1 & V2=1 of P=1" + ctx + "modified", true, {},
       "withdrawing both votes defeats the measure"},
  };
  return f;
}

Fixture path_example() {
  Fixture f;
  f.name = "diamond_paths";
  f.model_text = R"(model diamond_paths {
  exo U_A: {0, 1}
  endo A: {0, 1}
  endo B: {0, 1}
  endo C: {0, 1}
  endo D: {0, 1}
  A = U_A
  B = A
  C = A
  D = B | C
}
)";
  f.context_text = "(U_A=1)";
  const std::string ctx = " in (U_A=1) using ";
  f.checks = {
      {"cause? A=1 of D=1" + ctx + "butfor", true, {}, "the root drives both branches"},
      {"cause? A=1 of D=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? A=1 of D=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? A=1 of D=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? A=1 of D=1" + ctx + "hitchcock", false, {},
       "each single path is defeated by freezing the other branch at 1"},
  };
  return f;
}

std::string pollution_model(const std::string& name, int threshold) {
  return "model " + name + R"( {
  exo U_A: {0, 1}
  exo U_B: {0, 1}
  endo A: {0, 100}
  endo B: {0, 60}
  endo Dead: {0, 1}
  A = if U_A = 1 then 100 else 0
  B = if U_B = 1 then 60 else 0
  Dead = (A + B) >= )" + std::to_string(threshold) + "\n}\n";
}

Fixture pollution_k120() {
  Fixture f;
  f.name = "pollution_k120";
  f.model_text = pollution_model(f.name, 120);
  f.context_text = "(U_A=1, U_B=1)";
  const std::string ctx = " in (U_A=1, U_B=1) using ";
  f.checks = {
      {"cause? A=100 of Dead=1" + ctx + "butfor", true, {}, "both discharges are needed"},
      {"cause? A=100 of Dead=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? A=100 of Dead=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? A=100 of Dead=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? B=60 of Dead=1" + ctx + "butfor", true, {}, "both discharges are needed"},
      {"cause? B=60 of Dead=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? B=60 of Dead=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
  };
  return f;
}

Fixture pollution_k50() {
  Fixture f;
  f.name = "pollution_k50";
  f.model_text = pollution_model(f.name, 50);
  f.context_text = "(U_A=1, U_B=1)";
  const std::string ctx = " in (U_A=1, U_B=1) using ";
  f.checks = {
      {"cause? A=100 of Dead=1" + ctx + "original", true, {},
       "contingency where the other company stops dumping"},
      {"cause? A=100 of Dead=1" + ctx + "updated", true, {}, "the same contingency passes"},
      {"cause? A=100 of Dead=1" + ctx + "modified", false, {},
       "the other discharge already crosses the threshold"},
      {"cause? B=60 of Dead=1" + ctx + "original", true, {}, "symmetric contingency"},
      {"cause? B=60 of Dead=1" + ctx + "updated", true, {}, "symmetric contingency"},
      {"cause? B=60 of Dead=1" + ctx + "modified", false, {},
       "the other discharge already crosses the threshold"},
      {"cause? A=100 & B=60 of Dead=1" + ctx + "modified", true, {},
       "both companies together are the modified cause"},
      {"partof? A=100 of Dead=1" + ctx + "modified", true, {}, "member of the joint cause"},
  };
  return f;
}

Fixture pollution_k80() {
  Fixture f;
  f.name = "pollution_k80";
  f.model_text = pollution_model(f.name, 80);
  f.context_text = "(U_A=1, U_B=1)";
  const std::string ctx = " in (U_A=1, U_B=1) using ";
  f.checks = {
      {"cause? A=100 of Dead=1" + ctx + "butfor", true, {},
       "the small discharge cannot reach the threshold alone"},
      {"cause? A=100 of Dead=1" + ctx + "original", true, {}, "but-for causes pass every variant"},
      {"cause? A=100 of Dead=1" + ctx + "updated", true, {}, "but-for causes pass every variant"},
      {"cause? A=100 of Dead=1" + ctx + "modified", true, {}, "but-for causes pass every variant"},
      {"cause? B=60 of Dead=1" + ctx + "original", false, {},
       "with only 0 or 100 available to the other company, 60 never matters"},
      {"cause? B=60 of Dead=1" + ctx + "updated", false, {}, "as for the original variant"},
      {"cause? B=60 of Dead=1" + ctx + "modified", false, {}, "as for the original variant"},
  };
  return f;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = {
      forest_fire_disjunctive(),
      forest_fire_conjunctive(),
      rock_throwing(),
      prisoner(),
      bogus_prevention(),
      weslake_lamp(),
      fire_redux(),
      fire_redux_single_b(),
      glymour_base(),
      glymour_extended(),
      livengood_votes(),
      train_switch(),
      train_switch_tracks(),
      voting_machine(),
      path_example(),
      pollution_k120(),
      pollution_k50(),
      pollution_k80(),
  };
  return fixtures;
}

// ---------------------------------------------------------------------------
// Golden runner
// ---------------------------------------------------------------------------

namespace {

struct CheckRun {
  bool passed = false;
  std::string actual;
};

CheckRun run_check(const CausalModel& model, const GoldenCheck& check) {
  CheckRun run;
  auto parsed = dsl::parse_query(check.query, model);
  if (!parsed.ok()) {
    run.actual = "query failed to parse: " + dsl::format(parsed.diagnostics.front());
    return run;
  }
  const dsl::Query& query = *parsed.value;
  switch (query.kind) {
    case dsl::Query::Kind::Cause: {
      bool verdict = false;
      if (auto variant = dsl::hp_variant(*query.definition)) {
        verdict = is_cause(model, query.context, *query.candidate, *query.effect, *variant)
                      .is_cause();
      } else {
        if (query.candidate->size() != 1 ||
            query.effect->kind() != BoolFormula::Kind::Event) {
          run.actual = "path definitions need a single event on both sides";
          return run;
        }
        const PrimitiveEvent& cause_event = query.candidate->events()[0];
        const PrimitiveEvent& effect_event = query.effect->as_event();
        PathVerdict pv = (*query.definition == dsl::Definition::Hitchcock)
                             ? hitchcock_cause(model, query.context, cause_event, effect_event)
                             : h_account_cause(model, query.context, cause_event, effect_event);
        verdict = pv.is_cause;
      }
      run.passed = verdict == check.expected;
      run.actual = verdict ? "true" : "false";
      return run;
    }
    case dsl::Query::Kind::PartOf: {
      auto variant = dsl::hp_variant(*query.definition);
      PartOfCauseResult part = is_part_of_cause(model, query.context,
                                                query.candidate->events()[0], *query.effect,
                                                *variant);
      run.passed = part.is_part == check.expected;
      run.actual = part.is_part ? "true" : "false";
      return run;
    }
    case dsl::Query::Kind::Causes: {
      auto variant = dsl::hp_variant(*query.definition);
      std::vector<CauseVerdict> causes = find_causes(model, query.context, *query.effect,
                                                     *variant, query.max_size);
      std::vector<std::string> names;
      names.reserve(causes.size());
      for (const CauseVerdict& v : causes) {
        names.push_back(dsl::serialize_candidate(model, v.candidate));
      }
      run.passed = names == check.expected_causes;
      run.actual = "{";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) run.actual += "; ";
        run.actual += names[i];
      }
      run.actual += "}";
      return run;
    }
    case dsl::Query::Kind::Compare:
      run.actual = "compare queries are not golden-checkable";
      return run;
  }
  return run;
}

}  // namespace

GoldenOutcome run_golden_checks(std::ostream* out) {
  GoldenOutcome outcome;
  for (const Fixture& fixture : builtin_fixtures()) {
    auto model = dsl::parse_model(fixture.model_text);
    if (!model.ok()) {
      ++outcome.checks;
      ++outcome.failures;
      std::string line = "[" + fixture.name + "] model failed to parse: " +
                         dsl::format(model.diagnostics.front());
      outcome.failure_lines.push_back(line);
      if (out != nullptr) *out << "FAIL " << line << "\n";
      continue;
    }
    for (const GoldenCheck& check : fixture.checks) {
      ++outcome.checks;
      CheckRun run = run_check(*model.value, check);
      std::string expectation = check.expected_causes.empty()
                                    ? std::string(check.expected ? "true" : "false")
                                    : "exact cause list";
      std::string line = "[" + fixture.name + "] " + check.query + " => expected " +
                         expectation + ", got " + run.actual;
      if (!run.passed) {
        ++outcome.failures;
        outcome.failure_lines.push_back(line);
      }
      if (out != nullptr) {
        *out << (run.passed ? "PASS " : "FAIL ") << line << "\n";
      }
    }
  }
  if (out != nullptr) {
    *out << outcome.checks - outcome.failures << "/" << outcome.checks
         << " golden checks passed\n";
  }
  return outcome;
}

void write_fixture_files(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const Fixture& fixture : builtin_fixtures()) {
    {
      std::ofstream out(fs::path(dir) / (fixture.name + ".scm-model"), std::ios::binary);
      out << fixture.model_text;
    }
    int index = 0;
    for (const GoldenCheck& check : fixture.checks) {
      ++index;
      char suffix[16];
      std::snprintf(suffix, sizeof suffix, "_%02d", index);
      std::ofstream out(fs::path(dir) / (fixture.name + suffix + ".scm-query"),
                        std::ios::binary);
      out << check.query << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Random models
// ---------------------------------------------------------------------------

GeneratedModel random_model(const GeneratorParams& params) {
  ModelLimits limits;
  if (params.endogenous < 0 || params.exogenous < 0 ||
      params.endogenous + params.exogenous > limits.max_variables) {
    throw std::invalid_argument("generator parameters exceed the variable cap");
  }
  if (params.domain_size < 2 || params.domain_size > limits.max_domain_size) {
    throw std::invalid_argument("generator domain size outside the supported range");
  }
  if (params.max_fan_in < 0 || params.rows < 0) {
    throw std::invalid_argument("generator parameters must be non-negative");
  }

  std::mt19937_64 rng(params.seed);
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  std::vector<std::string> domain;
  for (int v = 0; v < params.domain_size; ++v) {
    domain.push_back(std::to_string(v));
  }

  ModelBuilder builder("random_" + std::to_string(params.seed));
  std::vector<VarId> pool;  // everything an equation may draw on
  for (int i = 1; i <= params.exogenous; ++i) {
    pool.push_back(builder.exogenous("U" + std::to_string(i), domain));
  }
  std::vector<VarId> endo;
  for (int i = 1; i <= params.endogenous; ++i) {
    endo.push_back(builder.endogenous("Z" + std::to_string(i), domain));
  }

  for (int i = 0; i < params.endogenous; ++i) {
    VarId target = endo[static_cast<std::size_t>(i)];
    // Parents come from the exogenous variables and earlier endogenous ones,
    // which keeps every generated model acyclic by construction.
    std::vector<VarId> candidates = pool;
    std::vector<VarId> parents;
    int fan_in = params.max_fan_in > 0 ? pick(params.max_fan_in + 1) : 0;
    for (int k = 0; k < fan_in && !candidates.empty(); ++k) {
      int at = pick(static_cast<int>(candidates.size()));
      parents.push_back(candidates[static_cast<std::size_t>(at)]);
      candidates.erase(candidates.begin() + at);
    }

    auto random_const = [&]() {
      return Expr::constant(static_cast<Value>(pick(params.domain_size)));
    };

    Expr body = random_const();
    if (!parents.empty()) {
      for (int row = 0; row < params.rows; ++row) {
        Expr cond = Expr::constant(1);
        bool have_term = false;
        for (VarId parent : parents) {
          if (pick(2) == 0 && have_term) continue;
          Expr term = Expr::eq(Expr::var(parent),
                               Expr::constant(static_cast<Value>(pick(params.domain_size))));
          cond = have_term ? Expr::logical_and(std::move(cond), std::move(term))
                           : std::move(term);
          have_term = true;
        }
        body = Expr::if_then_else(std::move(cond), random_const(), std::move(body));
      }
    }
    builder.equation(target, std::move(body));
    pool.push_back(target);
  }

  CausalModel model = builder.build();
  Assignment context(model.var_count());
  for (VarId u : model.exogenous()) {
    context.set(u, static_cast<ValueIndex>(pick(params.domain_size)));
  }
  return GeneratedModel{std::move(model), std::move(context)};
}

}  // namespace causal::corpus
