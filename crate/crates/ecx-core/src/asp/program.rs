//! The fixed Kemeny-CCAC rule set, split into guess, check, and saturation
//! parts. Byte-stable output targeting the Clingo 4 reading of aggregates
//! (the #sum comparison inside the check relies on it; no portability to
//! other solvers is attempted).

/// Returns the complete logic program; deterministic and byte-stable.
pub fn emit_program() -> &'static str {
    PROGRAM
}

const PROGRAM: &str = r#"% Kemeny-CCAC guess/check/saturate encoding.
%
% Instance facts expected: rcandnum/1, ucandnum/1, limit/1, preferredCand/1,
% prefnum/1, voternum/1, votecount/2, and p(Vote,Position,Candidate).
%
% ASCII spelling of primed predicates: gpref' is gprefp, ungpref' is
% ungprefp, countTo' is countTop, rank' is rankp, gwrankC' is gwrankCp.
% The published guess part spells one atom "grepf"; that is a typo for
% gpref and it is emitted as gpref here.

% ----- guess -----
preference(1..P) :- prefnum(P).
% Registered candidates.
candidate(1..C) :- rcandnum(C).
% Unregistered candidates.
ucandidate((M+1)..(M+N)) :- rcandnum(M), ucandnum(N).
% Guess a subset of at most K candidates to add.
{ candidate(C) : ucandidate(C) } K :- limit(K).
candnum(N) :- N = #count{ candidate(C) : candidate(C) }.
% Number of times candidate C is ranked below D.
wrank(P,C,D) :- p(P,X,C), p(P,Y,D), Y < X.
wrankC(C,D,N) :- candidate(C), candidate(D), N = #sum{ VC,P : votecount(P,VC), wrank(P,C,D) }.
position(1..M) :- candnum(M).
% Guess a consensus.
gpref(X,C) | ungpref(X,C) :- position(X), candidate(C).
:- gpref(X,C), gpref(Y,C), X != Y.
:- gpref(X,C), gpref(X,D), D != C.
:- gpref(X,C), ungpref(X,C).
% Loop checks if all possible positions for a given cand. are in ungpref.
npos(X,Y) :- position(X), Y = X+1.
countTo(C,1) :- ungpref(1,C).
countTo(C,X) :- countTo(C,Y), npos(Y,X), ungpref(X,C).
:- countTo(C,X), candidate(C), candnum(X).
% In the guessed consensus C > D.
rank(C,D) :- gpref(X,C), gpref(Y,D), X < Y.
% Number of votes that disagree on C and D.
gwrankC(C,D,N) :- rank(C,D), wrankC(C,D,N).
:- preferredCand(X), gpref(Y,X), position(Y), Y != 1.

% ----- check -----
% Guess another consensus.
gprefp(X,C) | ungprefp(X,C) :- position(X), candidate(C).
sat :- gprefp(X,C), gprefp(Y,C), X != Y.
sat :- gprefp(X,C), gprefp(X,D), D != C.
sat :- gprefp(X,C), ungprefp(X,C).
% Loop checks if all possible positions for a given cand. are in ungprefp.
countTop(C,1) :- ungprefp(1,C).
countTop(C,X) :- countTop(C,Y), npos(Y,X), ungprefp(X,C).
% Saturate if all possible positions for a given candidate are in ungprefp,
% which means a candidate is not ranked in the guess.
sat :- countTop(C,X), candidate(C), candnum(X).
% In the guessed consensus C > D.
rankp(C,D) :- gprefp(X,C), gprefp(Y,D), X < Y.
% Number of votes that disagree on C and D.
gwrankCp(C,D,N) :- rankp(C,D), wrankC(C,D,N).
sat :- #sum{ M,C1,C2,pos : gwrankCp(C1,C2,M); -N,D1,D2,neg : gwrankC(D1,D2,N) } >= 0.
sat :- preferredCand(X), gprefp(1,X).

% ----- saturate -----
gprefp(X,C) :- position(X), candidate(C), sat.
ungprefp(X,C) :- position(X), candidate(C), sat.
possibleCount(0..X) :- voternum(X).
gwrankCp(C,D,N) :- candidate(C), candidate(D), possibleCount(N), sat.
rankp(C,D) :- candidate(C), candidate(D), sat.
countTop(C,N) :- candidate(C), position(N), sat.
:- not sat.
"#;
