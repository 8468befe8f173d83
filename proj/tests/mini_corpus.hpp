#pragma once

// A small two-theory corpus for engine tests.
inline constexpr const char* kMiniCorpus = R"corpus(
theory logic
thm IMP_REFL: "!p:bool. p ==> p"
proof: gen_strip_tac THEN accept_tac
thm AND_COMM: "!p q:bool. p /\ q ==> q /\ p"
proof: gen_strip_tac THEN conj_tac THEN res_tac
thm OR_INTRO: "!p q:bool. p ==> p \/ q"
proof: gen_strip_tac THEN disj1_tac THEN accept_tac
thm AND_ELIM: "!p q:bool. p /\ q ==> p"
proof: gen_strip_tac THEN res_tac
thm EM: "!p:bool. p \/ ~p"
proof: strip_tac THEN cases_bool_tac "p" THEN rewrite_tac []

theory arith
requires logic
axiom ADD_0_L: "!n:num. 0 + n = n"
axiom ADD_SUC_L: "!m n:num. SUC m + n = SUC (m + n)"
thm ADD_0_R: "!n:num. n + 0 = n"
proof: induct_num_tac THENL [rewrite_tac [ADD_0_L], rewrite_tac [ADD_SUC_L]]
thm ADD_SUC_R: "!m n:num. m + SUC n = SUC (m + n)"
proof: induct_num_tac THENL [rewrite_tac [ADD_0_L], rewrite_tac [ADD_SUC_L]]
thm ONE_ADD: "!n:num. SUC 0 + n = SUC n"
proof: strip_tac THEN rewrite_tac [ADD_SUC_L, ADD_0_L]
thm ADD_ONE: "!n:num. n + SUC 0 = SUC n"
proof: strip_tac THEN rewrite_tac [ADD_SUC_R, ADD_0_R]
)corpus";
