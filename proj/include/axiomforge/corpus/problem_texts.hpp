#pragma once

#include <string_view>

// Authored problem instances. Recorded optima are re-checked by the test
// suite against an independent brute-force search.
namespace axiomforge::corpus::texts {

// --- blocksworld -----------------------------------------------------------

inline constexpr std::string_view kBlocksFlagship = R"pddl((define (problem bw-flagship)
  (:domain blocksworld)
  (:objects a b c d)
  (:init (on-table a) (on b a) (on c b) (clear c) (on-table d) (clear d) (arm-empty))
  (:goal (and (on b d) (on c b))))
)pddl";

inline constexpr std::string_view kBlocksSwap2 = R"pddl((define (problem bw-swap-2)
  (:domain blocksworld)
  (:objects a b)
  (:init (on-table b) (on a b) (clear a) (arm-empty))
  (:goal (on b a)))
)pddl";

inline constexpr std::string_view kBlocksToTable = R"pddl((define (problem bw-to-table)
  (:domain blocksworld)
  (:objects a b)
  (:init (on-table b) (on a b) (clear a) (arm-empty))
  (:goal (on-table a)))
)pddl";

inline constexpr std::string_view kBlocksReverse3 = R"pddl((define (problem bw-reverse-3)
  (:domain blocksworld)
  (:objects a b c)
  (:init (on-table a) (on b a) (on c b) (clear c) (arm-empty))
  (:goal (and (on a b) (on b c))))
)pddl";

inline constexpr std::string_view kBlocksSelfOn = R"pddl((define (problem bw-self-on)
  (:domain blocksworld)
  (:objects a b)
  (:init (on-table a) (on-table b) (clear a) (clear b) (arm-empty))
  (:goal (on a a)))
)pddl";

// Lets the arm carry a whole tower: lifting a block takes everything above it.
inline constexpr std::string_view kBlocksMultiLiftDomain = R"pddl((define (domain blocksworld)
    (:requirements :strips :equality)
    (:predicates
        (clear ?x)
        (on-table ?x)
        (arm-empty)
        (holding ?x)
        (on ?x ?y)
        (holding-tower ?x)
    )

    (:action pickup
        :parameters (?ob)
        :precondition (and (clear ?ob) (on-table ?ob) (arm-empty))
        :effect (and (holding ?ob) (not (clear ?ob)) (not (on-table ?ob)) (not (arm-empty)))
    )

    (:action putdown
        :parameters (?ob)
        :precondition (and (holding ?ob))
        :effect (and (clear ?ob) (arm-empty) (on-table ?ob) (not (holding ?ob)))
    )

    (:action stack
        :parameters (?ob ?underob)
        :precondition (and (clear ?underob) (holding ?ob))
        :effect (and (arm-empty) (clear ?ob) (on ?ob ?underob) (not (clear ?underob)) (not (holding ?ob)))
    )

    (:action unstack
        :parameters (?ob ?underob)
        :precondition (and (on ?ob ?underob) (clear ?ob) (arm-empty))
        :effect (and (holding ?ob) (clear ?underob) (not (on ?ob ?underob)) (not (clear ?ob)) (not (arm-empty)))
    )

    (:action unstack-tower
        :parameters (?ob ?underob)
        :precondition (and (on ?ob ?underob) (arm-empty))
        :effect (and (holding-tower ?ob) (clear ?underob) (not (on ?ob ?underob)) (not (arm-empty)))
    )

    (:action stack-tower
        :parameters (?ob ?underob)
        :precondition (and (holding-tower ?ob) (clear ?underob))
        :effect (and (arm-empty) (on ?ob ?underob) (not (clear ?underob)) (not (holding-tower ?ob)))
    )
)
)pddl";

// Lets the arm pull a block out of the middle of a tower; the block above
// drops onto the one below.
inline constexpr std::string_view kBlocksMidExtractDomain = R"pddl((define (domain blocksworld)
    (:requirements :strips :equality)
    (:predicates
        (clear ?x)
        (on-table ?x)
        (arm-empty)
        (holding ?x)
        (on ?x ?y)
    )

    (:action pickup
        :parameters (?ob)
        :precondition (and (clear ?ob) (on-table ?ob) (arm-empty))
        :effect (and (holding ?ob) (not (clear ?ob)) (not (on-table ?ob)) (not (arm-empty)))
    )

    (:action putdown
        :parameters (?ob)
        :precondition (and (holding ?ob))
        :effect (and (clear ?ob) (arm-empty) (on-table ?ob) (not (holding ?ob)))
    )

    (:action stack
        :parameters (?ob ?underob)
        :precondition (and (clear ?underob) (holding ?ob))
        :effect (and (arm-empty) (clear ?ob) (on ?ob ?underob) (not (clear ?underob)) (not (holding ?ob)))
    )

    (:action unstack
        :parameters (?ob ?underob)
        :precondition (and (on ?ob ?underob) (clear ?ob) (arm-empty))
        :effect (and (holding ?ob) (clear ?underob) (not (on ?ob ?underob)) (not (clear ?ob)) (not (arm-empty)))
    )

    (:action extract
        :parameters (?ob ?underob ?overob)
        :precondition (and (on ?overob ?ob) (on ?ob ?underob) (clear ?overob) (arm-empty))
        :effect (and (holding ?ob) (on ?overob ?underob) (not (on ?overob ?ob)) (not (on ?ob ?underob)) (not (arm-empty)))
    )
)
)pddl";

// --- briefcase -------------------------------------------------------------

inline constexpr std::string_view kBriefcaseOneDoc = R"pddl((define (problem bc-one-doc)
  (:domain briefcase)
  (:objects home office - location doc - portable)
  (:init (is-at home) (at doc home))
  (:goal (at doc office)))
)pddl";

inline constexpr std::string_view kBriefcaseTwoDocs = R"pddl((define (problem bc-two-docs)
  (:domain briefcase)
  (:objects home office - location d1 d2 - portable)
  (:init (is-at home) (at d1 home) (at d2 home))
  (:goal (and (at d1 office) (at d2 office))))
)pddl";

inline constexpr std::string_view kBriefcaseReturn = R"pddl((define (problem bc-deliver-and-return)
  (:domain briefcase)
  (:objects home office - location doc - portable)
  (:init (is-at home) (at doc home))
  (:goal (and (at doc office) (not (in doc)) (is-at home))))
)pddl";

// --- bulldozer -------------------------------------------------------------

inline constexpr std::string_view kBulldozerBoardDrive = R"pddl((define (problem bd-board-drive)
  (:domain bulldozer)
  (:objects jack dozer l1 l2)
  (:init (person jack) (vehicle dozer) (mobile jack)
         (at jack l1) (at dozer l1) (road l1 l2))
  (:goal (at dozer l2)))
)pddl";

inline constexpr std::string_view kBulldozerWalkCross = R"pddl((define (problem bd-walk-cross)
  (:domain bulldozer)
  (:objects jack dozer l1 l2 l3)
  (:init (person jack) (vehicle dozer) (mobile jack)
         (at jack l1) (at dozer l2) (road l1 l2) (bridge l2 l3))
  (:goal (at dozer l3)))
)pddl";

// --- casino ----------------------------------------------------------------

inline constexpr std::string_view kCasinoOnePrize = R"pddl((define (problem cs-one-prize)
  (:domain casino)
  (:objects home casino - location p1 - prize1)
  (:init (at home) (iscasino casino) (moveto home) (moveto casino) (getprize1 p1))
  (:goal (haveprize1 p1)))
)pddl";

inline constexpr std::string_view kCasinoTwoPrizes = R"pddl((define (problem cs-two-prizes-return)
  (:domain casino)
  (:objects home casino - location p1 - prize1 p2 - prize2)
  (:init (at home) (iscasino casino) (moveto home) (moveto casino) (getprize1 p1) (getprize2 p2))
  (:goal (and (haveprize1 p1) (haveprize2 p2) (at home))))
)pddl";

// --- depot -----------------------------------------------------------------

inline constexpr std::string_view kDepotCrossSite = R"pddl((define (problem dp-cross-site)
  (:domain depot)
  (:objects depot0 - depot distributor0 - distributor truck0 - truck
            hoist0 hoist1 - hoist pallet0 pallet1 - pallet crate0 - crate)
  (:init (at pallet0 depot0) (at pallet1 distributor0) (clear pallet1)
         (at truck0 depot0)
         (at hoist0 depot0) (available hoist0) (at hoist1 distributor0) (available hoist1)
         (at crate0 depot0) (on crate0 pallet0) (clear crate0))
  (:goal (on crate0 pallet1)))
)pddl";

inline constexpr std::string_view kDepotRestack = R"pddl((define (problem dp-restack)
  (:domain depot)
  (:objects depot0 - depot hoist0 - hoist pallet0 pallet1 - pallet crate0 - crate)
  (:init (at pallet0 depot0) (at pallet1 depot0) (clear pallet1)
         (at hoist0 depot0) (available hoist0)
         (at crate0 depot0) (on crate0 pallet0) (clear crate0))
  (:goal (on crate0 pallet1)))
)pddl";

// --- ferry -----------------------------------------------------------------

inline constexpr std::string_view kFerryOneCar = R"pddl((define (problem fr-one-car)
  (:domain ferry)
  (:objects l1 l2 car1 - obj f - ferry)
  (:init (location l1) (location l2) (not-eq l1 l2) (not-eq l2 l1)
         (sail l1) (sail l2) (car car1) (board car1) (debark car1)
         (at car1 l1) (at-ferry l1) (empty-ferry f))
  (:goal (at car1 l2)))
)pddl";

inline constexpr std::string_view kFerryFarSide = R"pddl((define (problem fr-far-side)
  (:domain ferry)
  (:objects l1 l2 car1 - obj f - ferry)
  (:init (location l1) (location l2) (not-eq l1 l2) (not-eq l2 l1)
         (sail l1) (sail l2) (car car1) (board car1) (debark car1)
         (at car1 l1) (at-ferry l2) (empty-ferry f))
  (:goal (at car1 l2)))
)pddl";

// --- gripper ---------------------------------------------------------------

inline constexpr std::string_view kGripperOneBall = R"pddl((define (problem gr-one-ball)
  (:domain gripper)
  (:objects rooma roomb ball1 left right)
  (:init (room rooma) (room roomb) (ball ball1) (gripper left) (gripper right)
         (at-robby rooma) (at ball1 rooma) (free left) (free right))
  (:goal (at ball1 roomb)))
)pddl";

inline constexpr std::string_view kGripperTwoBalls = R"pddl((define (problem gr-two-balls)
  (:domain gripper)
  (:objects rooma roomb ball1 ball2 left right)
  (:init (room rooma) (room roomb) (ball ball1) (ball ball2) (gripper left) (gripper right)
         (at-robby rooma) (at ball1 rooma) (at ball2 rooma) (free left) (free right))
  (:goal (and (at ball1 roomb) (at ball2 roomb))))
)pddl";

// --- hanoi -----------------------------------------------------------------

inline constexpr std::string_view kHanoi3 = R"pddl((define (problem hn-3)
  (:domain hanoi)
  (:objects p1 p2 p3 d1 d2 d3)
  (:init (smaller p1 d1) (smaller p1 d2) (smaller p1 d3)
         (smaller p2 d1) (smaller p2 d2) (smaller p2 d3)
         (smaller p3 d1) (smaller p3 d2) (smaller p3 d3)
         (smaller d2 d1) (smaller d3 d1) (smaller d3 d2)
         (clear p2) (clear p3) (clear d1)
         (on d3 p1) (on d2 d3) (on d1 d2))
  (:goal (and (on d3 p3) (on d2 d3) (on d1 d2))))
)pddl";

inline constexpr std::string_view kHanoi2 = R"pddl((define (problem hn-2)
  (:domain hanoi)
  (:objects p1 p2 p3 d1 d2)
  (:init (smaller p1 d1) (smaller p1 d2) (smaller p2 d1) (smaller p2 d2)
         (smaller p3 d1) (smaller p3 d2) (smaller d2 d1)
         (clear p2) (clear p3) (clear d1) (on d2 p1) (on d1 d2))
  (:goal (and (on d2 p3) (on d1 d2))))
)pddl";

inline constexpr std::string_view kHanoi1 = R"pddl((define (problem hn-1)
  (:domain hanoi)
  (:objects p1 p2 p3 d1)
  (:init (smaller p1 d1) (smaller p2 d1) (smaller p3 d1)
         (clear p2) (clear p3) (clear d1) (on d1 p1))
  (:goal (on d1 p3)))
)pddl";

// --- logistics -------------------------------------------------------------

inline constexpr std::string_view kLogisticsTruck = R"pddl((define (problem lg-truck)
  (:domain logistics)
  (:objects pkg - package t1 - truck l1 l2 - location c1 - city)
  (:init (in-city l1 c1) (in-city l2 c1) (at t1 l1) (at pkg l1))
  (:goal (at pkg l2)))
)pddl";

inline constexpr std::string_view kLogisticsAir = R"pddl((define (problem lg-truck-air)
  (:domain logistics)
  (:objects pkg - package t1 - truck a1 - airplane l1 - location
            ap1 ap2 - airport c1 c2 - city)
  (:init (in-city l1 c1) (in-city ap1 c1) (in-city ap2 c2)
         (at t1 l1) (at pkg l1) (at a1 ap1))
  (:goal (at pkg ap2)))
)pddl";

// --- maze ------------------------------------------------------------------

inline constexpr std::string_view kMaze2x2 = R"pddl((define (problem mz-2x2)
  (:domain maze)
  (:objects p - player c11 c12 c21 c22 - location)
  (:init (at p c11) (clear c12) (clear c21) (clear c22) (oriented-up p)
         (move-dir-right c11 c12) (move-dir-left c12 c11)
         (move-dir-right c21 c22) (move-dir-left c22 c21)
         (move-dir-down c11 c21) (move-dir-up c21 c11)
         (move-dir-down c12 c22) (move-dir-up c22 c12)
         (is-goal c22))
  (:goal (at p c22)))
)pddl";

inline constexpr std::string_view kMaze2x3Blocked = R"pddl((define (problem mz-2x3-blocked)
  (:domain maze)
  (:objects p - player c11 c12 c13 c21 c22 c23 - location)
  (:init (at p c11) (clear c13) (clear c21) (clear c22) (clear c23) (oriented-up p)
         (move-dir-right c11 c12) (move-dir-left c12 c11)
         (move-dir-right c12 c13) (move-dir-left c13 c12)
         (move-dir-right c21 c22) (move-dir-left c22 c21)
         (move-dir-right c22 c23) (move-dir-left c23 c22)
         (move-dir-down c11 c21) (move-dir-up c21 c11)
         (move-dir-down c12 c22) (move-dir-up c22 c12)
         (move-dir-down c13 c23) (move-dir-up c23 c13)
         (is-goal c13))
  (:goal (at p c13)))
)pddl";

// --- miconic ---------------------------------------------------------------

inline constexpr std::string_view kMiconicUp = R"pddl((define (problem mc-up)
  (:domain miconic)
  (:objects f0 f1 f2 - floor p0 - passenger)
  (:init (above f0 f1) (above f0 f2) (above f1 f2)
         (up f0) (up f1) (up f2) (down f0) (down f1) (down f2)
         (board f0 p0) (board f1 p0) (board f2 p0)
         (depart f0 p0) (depart f1 p0) (depart f2 p0)
         (origin p0 f0) (destin p0 f2) (not-boarded p0) (not-served p0)
         (lift-at f0))
  (:goal (served p0)))
)pddl";

inline constexpr std::string_view kMiconicDownUp = R"pddl((define (problem mc-down-up)
  (:domain miconic)
  (:objects f0 f1 f2 - floor p0 - passenger)
  (:init (above f0 f1) (above f0 f2) (above f1 f2)
         (up f0) (up f1) (up f2) (down f0) (down f1) (down f2)
         (board f0 p0) (board f1 p0) (board f2 p0)
         (depart f0 p0) (depart f1 p0) (depart f2 p0)
         (origin p0 f0) (destin p0 f2) (not-boarded p0) (not-served p0)
         (lift-at f1))
  (:goal (served p0)))
)pddl";

// --- monkey ----------------------------------------------------------------

inline constexpr std::string_view kMonkeyBananas = R"pddl((define (problem mk-bananas)
  (:domain monkey)
  (:objects p1 p2 p3)
  (:init (location p1) (location p2) (location p3) (on-floor)
         (at monkey p1) (at knife p1) (at box p2) (at bananas p3))
  (:goal (hasbananas)))
)pddl";

inline constexpr std::string_view kMonkeyWater = R"pddl((define (problem mk-water)
  (:domain monkey)
  (:objects p1 p2)
  (:init (location p1) (location p2) (on-floor)
         (at monkey p1) (at glass p1) (at box p2) (at waterfountain p2))
  (:goal (haswater)))
)pddl";

}  // namespace axiomforge::corpus::texts
