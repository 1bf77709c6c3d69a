#pragma once

#include <string_view>

// Verbatim domain texts for the twelve bundled games.
namespace axiomforge::corpus::texts {

inline constexpr std::string_view kBlocksworldDomain = R"pddl((define (domain blocksworld)
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
)
)pddl";

inline constexpr std::string_view kBriefcaseDomain = R"pddl((define (domain briefcase)
    (:requirements :strips :typing :conditional-effects :universal-preconditions)

    (:predicates
        (at ?y - portable ?x - location)
        (in ?x - portable)
        (is-at ?x - location)
    )

    (:action move
        :parameters (?m ?l - location)
        :precondition (is-at ?m)
        :effect (and
            (is-at ?l)
            (not (is-at ?m))
            (forall
                (?x - portable)
                (when
                    (in ?x)
                    (and (at ?x ?l)
                        (not (at ?x ?m))))))
    )

    (:action take-out
        :parameters (?x - portable)
        :precondition (in ?x)
        :effect (not (in ?x))
    )

    (:action put-in
        :parameters (?x - portable ?l - location)
        :precondition (and (not (in ?x)) (at ?x ?l) (is-at ?l))
        :effect (in ?x)
    )
)
)pddl";

inline constexpr std::string_view kBulldozerDomain = R"pddl((define (domain bulldozer)
	(:requirements :strips :equality)

	(:predicates
		(road ?from ?to)
		(at ?thing ?place)
		(mobile ?thing)
		(bridge ?from ?to)
		(person ?p)
		(vehicle ?v)
		(driving ?p ?v)
	)

	(:action Drive
		:parameters (?thing ?from ?to)
		:precondition (and (road ?from ?to)
			(at ?thing ?from)
			(mobile ?thing)
			(not (= ?from ?to)))
		:effect (and (at ?thing ?to) (not (at ?thing ?from)))
	)

	(:action Cross
		:parameters (?thing ?from ?to)
		:precondition (and (bridge ?from ?to)
			(at ?thing ?from)
			(mobile ?thing)
			(not (= ?from ?to)))
		:effect (and (at ?thing ?to) (not (at ?thing ?from)))
	)

	(:action Board
		:parameters (?person ?place ?vehicle)
		:precondition (and (at ?person ?place)
			(person ?person)
			(vehicle ?vehicle)
			(at ?vehicle ?place))
		:effect (and (driving ?person ?vehicle)
			(mobile ?vehicle)
			(not (at ?person ?place))
			(not (mobile ?person)))
	)

	(:action Disembark
		:parameters (?person ?place ?vehicle)
		:precondition (and (person ?person)
			(vehicle ?vehicle)
			(driving ?person ?vehicle)
			(at ?vehicle ?place))
		:effect (and (at ?person ?place)
			(mobile ?person)
			(not (driving ?person ?vehicle))
			(not (mobile ?vehicle)))
	)
)
)pddl";

inline constexpr std::string_view kCasinoDomain = R"pddl((define (domain casino)
    (:requirements :strips :typing)

    (:types
        location prize1 prize2 prize3
    )

    (:predicates
        (At ?loc - location)
        (IsCasino ?loc - location)
        (MoveTo ?loc - location)
        (GetPrize1 ?p1 - prize1)
        (HavePrize1 ?p1 - prize1)
        (GetPrize2 ?p2 - prize2)
        (HavePrize2 ?p2 - prize2)
        (GetPrize3 ?p3 - prize3)
        (HavePrize3 ?p3 - prize3)
    )

    (:action MoveTo
        :parameters (?sloc - location ?eloc - location)
        :precondition (and (MoveTo ?eloc)
            (At ?sloc))
        :effect (and (not (At ?sloc))
            (At ?eloc))
    )

    (:action GetPrize1
        :parameters (?prize - prize1 ?loc - location)
        :precondition (and (GetPrize1 ?prize)
            (At ?loc)
            (IsCasino ?loc)
            (not (HavePrize1 ?prize)))
        :effect (and (HavePrize1 ?prize))
    )

    (:action GetPrize2
        :parameters (?prize - prize2 ?loc - location)
        :precondition (and (GetPrize2 ?prize)
            (At ?loc)
            (IsCasino ?loc)
            (not (HavePrize2 ?prize)))
        :effect (and (HavePrize2 ?prize))
    )

    (:action GetPrize3
        :parameters (?prize - prize3 ?loc - location)
        :precondition (and (GetPrize3 ?prize)
            (At ?loc)
            (IsCasino ?loc)
            (not (HavePrize3 ?prize)))
        :effect (and (HavePrize3 ?prize))
    )
)
)pddl";

inline constexpr std::string_view kDepotDomain = R"pddl((define (domain Depot)
    (:requirements :typing)

    (:types
        place locatable - object
        depot distributor - place
        truck hoist surface - locatable
        pallet crate - surface
    )

    (:predicates
        (at ?x - locatable ?y - place)
        (on ?x - crate ?y - surface)
        (in ?x - crate ?y - truck)
        (lifting ?x - hoist ?y - crate)
        (available ?x - hoist)
        (clear ?x - surface)
    )

    (:action Drive
        :parameters (?x - truck ?y - place ?z - place)
        :precondition (and (at ?x ?y))
        :effect (and (not (at ?x ?y)) (at ?x ?z))
    )

    (:action Lift
        :parameters (?x - hoist ?y - crate ?z - surface ?p - place)
        :precondition (and (at ?x ?p) (available ?x) (at ?y ?p) (on ?y ?z) (clear ?y))
        :effect (and (not (at ?y ?p)) (lifting ?x ?y) (not (clear ?y))
            (not (available ?x)) (clear ?z) (not (on ?y ?z)))
    )

    (:action Drop
        :parameters (?x - hoist ?y - crate ?z - surface ?p - place)
        :precondition (and (at ?x ?p) (at ?z ?p) (clear ?z) (lifting ?x ?y))
        :effect (and (available ?x) (not (lifting ?x ?y)) (at ?y ?p)
            (not (clear ?z)) (clear ?y) (on ?y ?z))
    )

    (:action Load
        :parameters (?x - hoist ?y - crate ?z - truck ?p - place)
        :precondition (and (at ?x ?p) (at ?z ?p) (lifting ?x ?y))
        :effect (and (not (lifting ?x ?y)) (in ?y ?z) (available ?x))
    )

    (:action Unload
        :parameters (?x - hoist ?y - crate ?z - truck ?p - place)
        :precondition (and (at ?x ?p) (at ?z ?p) (available ?x) (in ?y ?z))
        :effect (and (not (in ?y ?z)) (not (available ?x)) (lifting ?x ?y))
    )
)
)pddl";

inline constexpr std::string_view kFerryDomain = R"pddl((define (domain ferry)
    (:requirements :typing)

    (:types
        obj ferry
    )

    (:predicates
        (board ?v0 - obj)
        (not-eq ?v0 - obj ?v1 - obj)
        (car ?v0 - obj)
        (full-ferry ?v0 - ferry)
        (at-ferry ?v0 - obj)
        (empty-ferry ?v0 - ferry)
        (location ?v0 - obj)
        (on ?v0 - obj)
        (sail ?v0 - obj)
        (debark ?v0 - obj)
        (at ?v0 - obj ?v1 - obj)
    )

    (:action board
        :parameters (?car - obj ?loc - obj ?ferry - ferry)
        :precondition (and (at ?car ?loc)
            (at-ferry ?loc)
            (board ?car)
            (car ?car)
            (empty-ferry ?ferry)
            (location ?loc))
        :effect (and (on ?car)
            (not (at ?car ?loc))
            (not (empty-ferry ?ferry))
            (full-ferry ?ferry))
    )

    (:action sail
        :parameters (?from - obj ?to - obj)
        :precondition (and (at-ferry ?from)
            (location ?from)
            (location ?to)
            (not-eq ?from ?to)
            (sail ?to))
        :effect (and (at-ferry ?to)
            (not (at-ferry ?from)))
    )

    (:action debark
        :parameters (?car - obj ?loc - obj ?ferry - ferry)
        :precondition (and (at-ferry ?loc)
            (car ?car)
            (debark ?car)
            (full-ferry ?ferry)
            (location ?loc)
            (on ?car))
        :effect (and (at ?car ?loc)
            (empty-ferry ?ferry)
            (not (full-ferry ?ferry))
            (not (on ?car)))
    )
)
)pddl";

inline constexpr std::string_view kGripperDomain = R"pddl((define (domain gripper)
	(:requirements :strips)

	(:predicates
		(room ?r)
		(ball ?b)
		(gripper ?g)
		(at-robby ?r)
		(at ?b ?r)
		(free ?g)
		(carry ?o ?g)
	)

	(:action move
		:parameters (?from ?to)
		:precondition (and (room ?from) (room ?to) (at-robby ?from))
		:effect (and (at-robby ?to) (not (at-robby ?from)))
	)

	(:action pick
		:parameters (?obj ?room ?gripper)
		:precondition (and (ball ?obj) (room ?room) (gripper ?gripper)
			(at ?obj ?room) (at-robby ?room) (free ?gripper))
		:effect (and (carry ?obj ?gripper) (not (at ?obj ?room))
			(not (free ?gripper)))
	)

	(:action drop
		:parameters (?obj ?room ?gripper)
		:precondition (and (ball ?obj) (room ?room) (gripper ?gripper)
			(carry ?obj ?gripper) (at-robby ?room))
		:effect (and (at ?obj ?room) (free ?gripper) (not (carry ?obj ?gripper)))
	)
)
)pddl";

inline constexpr std::string_view kHanoiDomain = R"pddl((define (domain hanoi)
	(:requirements :strips)

	(:predicates
		(clear ?x)
		(on ?x ?y)
		(smaller ?x ?y)
	)

	(:action move
		:parameters (?disc ?from ?to)
		:precondition (and (smaller ?to ?disc)
			(on ?disc ?from)
			(clear ?disc)
			(clear ?to))
		:effect (and (clear ?from)
			(on ?disc ?to)
			(not (on ?disc ?from))
			(not (clear ?to)))
	)
)
)pddl";

inline constexpr std::string_view kLogisticsDomain = R"pddl((define (domain logistics)
	(:requirements :strips :typing)

	(:types
		package location vehicle - object
		truck airplane - vehicle
		city airport - location
	)

	(:predicates
		(at ?vehicle-or-package -
			(either vehicle package) ?location - location)
		(in ?package - package ?vehicle - vehicle)
		(in-city ?loc-or-truck -
			(either location truck) ?citys - city)
	)

	(:action load-truck
		:parameters (?obj - package ?truck - truck ?loc - location)
		:precondition (and (at ?truck ?loc)
			(at ?obj ?loc))
		:effect (and (not (at ?obj ?loc))
			(in ?obj ?truck))
	)

	(:action load-airplane
		:parameters (?obj - package ?airplane - airplane ?loc - airport)
		:precondition (and (at ?obj ?loc)
			(at ?airplane ?loc))
		:effect (and (not (at ?obj ?loc))
			(in ?obj ?airplane))
	)

	(:action unload-truck
		:parameters (?obj - package ?truck - truck ?loc - location)
		:precondition (and (at ?truck ?loc)
			(in ?obj ?truck))
		:effect (and (not (in ?obj ?truck))
			(at ?obj ?loc))
	)

	(:action unload-airplane
		:parameters (?obj - package ?airplane - airplane ?loc - airport)
		:precondition (and (in ?obj ?airplane)
			(at ?airplane ?loc))
		:effect (and (not (in ?obj ?airplane))
			(at ?obj ?loc))
	)

	(:action drive-truck
		:parameters (?truck - truck ?loc-from - location ?loc-to - location ?city - city)
		:precondition (and (at ?truck ?loc-from)
			(in-city ?loc-from ?city)
			(in-city ?loc-to ?city))
		:effect (and (not (at ?truck ?loc-from))
			(at ?truck ?loc-to))
	)

	(:action fly-airplane
		:parameters (?airplane - airplane ?loc-from - airport ?loc-to - airport)
		:precondition (at ?airplane ?loc-from)
		:effect (and (not (at ?airplane ?loc-from))
			(at ?airplane ?loc-to))
	)
)
)pddl";

inline constexpr std::string_view kMazeDomain = R"pddl((define (domain maze)
    (:requirements :strips :typing)

    (:types
        player location
    )

    (:predicates
        (move-dir-up ?v0 - location ?v1 - location)
        (move-dir-down ?v0 - location ?v1 - location)
        (move-dir-left ?v0 - location ?v1 - location)
        (move-dir-right ?v0 - location ?v1 - location)
        (clear ?v0 - location)
        (at ?v0 - player ?v1 - location)
        (oriented-up ?v0 - player)
        (oriented-down ?v0 - player)
        (oriented-left ?v0 - player)
        (oriented-right ?v0 - player)
        (is-goal ?v0 - location)
    )

    (:action move-up
        :parameters (?p - player ?from - location ?to - location)
        :precondition (and (at ?p ?from)
            (clear ?to)
            (move-dir-up ?from ?to))
        :effect (and (not (at ?p ?from))
            (not (clear ?to))
            (at ?p ?to)
            (clear ?from)
            (not (oriented-down ?p))
            (not (oriented-left ?p))
            (not (oriented-right ?p))
            (oriented-up ?p))
    )

    (:action move-down
        :parameters (?p - player ?from - location ?to - location)
        :precondition (and (at ?p ?from)
            (clear ?to)
            (move-dir-down ?from ?to))
        :effect (and (not (at ?p ?from))
            (not (clear ?to))
            (at ?p ?to)
            (clear ?from)
            (not (oriented-up ?p))
            (not (oriented-left ?p))
            (not (oriented-right ?p))
            (oriented-down ?p))
    )

    (:action move-left
        :parameters (?p - player ?from - location ?to - location)
        :precondition (and (at ?p ?from)
            (clear ?to)
            (move-dir-left ?from ?to))
        :effect (and (not (at ?p ?from))
            (not (clear ?to))
            (at ?p ?to)
            (clear ?from)
            (not (oriented-down ?p))
            (not (oriented-up ?p))
            (not (oriented-right ?p))
            (oriented-left ?p))
    )

    (:action move-right
        :parameters (?p - player ?from - location ?to - location)
        :precondition (and (at ?p ?from)
            (clear ?to)
            (move-dir-right ?from ?to))
        :effect (and (not (at ?p ?from))
            (not (clear ?to))
            (at ?p ?to)
            (clear ?from)
            (not (oriented-down ?p))
            (not (oriented-left ?p))
            (not (oriented-up ?p))
            (oriented-right ?p))
    )
)
)pddl";

inline constexpr std::string_view kMiconicDomain = R"pddl((define (domain miconic)
    (:requirements :typing)

    (:types
        passenger floor
    )

    (:predicates
        (not-boarded ?v0 - passenger)
        (down ?v0 - floor)
        (boarded ?v0 - passenger)
        (depart ?v0 - floor ?v1 - passenger)
        (not-served ?v0 - passenger)
        (origin ?v0 - passenger ?v1 - floor)
        (board ?v0 - floor ?v1 - passenger)
        (lift-at ?v0 - floor)
        (served ?v0 - passenger)
        (destin ?v0 - passenger ?v1 - floor)
        (up ?v0 - floor)
        (above ?v0 - floor ?v1 - floor)
    )

    (:action down
        :parameters (?f1 - floor ?f2 - floor)
        :precondition (and (above ?f2 ?f1)
            (down ?f2)
            (lift-at ?f1))
        :effect (and (lift-at ?f2)
            (not (lift-at ?f1)))
    )

    (:action board
        :parameters (?f - floor ?p - passenger)
        :precondition (and (board ?f ?p)
            (lift-at ?f)
            (origin ?p ?f))
        :effect (and (boarded ?p))
    )

    (:action up
        :parameters (?f1 - floor ?f2 - floor)
        :precondition (and (above ?f1 ?f2)
            (lift-at ?f1)
            (up ?f2))
        :effect (and (lift-at ?f2)
            (not (lift-at ?f1)))
    )

    (:action depart
        :parameters (?f - floor ?p - passenger)
        :precondition (and (boarded ?p)
            (depart ?f ?p)
            (destin ?p ?f)
            (lift-at ?f))
        :effect (and (not (boarded ?p))
            (served ?p))
    )
)
)pddl";

inline constexpr std::string_view kMonkeyDomain = R"pddl((define (domain monkey)
	(:requirements :strips)

	(:constants
		monkey box knife bananas glass waterfountain
	)

	(:predicates
		(location ?x)
		(on-floor)
		(at ?m ?x)
		(hasknife)
		(onbox ?x)
		(hasbananas)
		(hasglass)
		(haswater)
	)

	(:action GO-TO
		:parameters (?x ?y)
		:precondition (and (location ?x) (location ?y) (on-floor) (at monkey ?y))
		:effect (and (at monkey ?x) (not (at monkey ?y)))
	)

	(:action CLIMB
		:parameters (?x)
		:precondition (and (location ?x) (at box ?x) (at monkey ?x))
		:effect (and (onbox ?x) (not (on-floor)))
	)

	(:action PUSH-BOX
		:parameters (?x ?y)
		:precondition (and (location ?x) (location ?y) (at box ?y) (at monkey ?y)
			(on-floor))
		:effect (and (at monkey ?x) (not (at monkey ?y))
			(at box ?x) (not (at box ?y)))
	)

	(:action GET-KNIFE
		:parameters (?y)
		:precondition (and (location ?y) (at knife ?y) (at monkey ?y))
		:effect (and (hasknife) (not (at knife ?y)))
	)

	(:action GRAB-BANANAS
		:parameters (?y)
		:precondition (and (location ?y) (hasknife)
			(at bananas ?y) (onbox ?y))
		:effect (hasbananas)
	)

	(:action PICKGLASS
		:parameters (?y)
		:precondition (and (location ?y) (at glass ?y) (at monkey ?y))
		:effect (and (hasglass) (not (at glass ?y)))
	)

	(:action GETWATER
		:parameters (?y)
		:precondition (and (location ?y) (hasglass)
			(at waterfountain ?y)
			(at monkey ?y)
			(onbox ?y))
		:effect (haswater)
	)
)
)pddl";

}  // namespace axiomforge::corpus::texts
