"""Generate the bundled word-vector table used by the static embedding provider.

Every word gets a deterministic unit vector derived from a hash of the word
itself plus one shared direction per concept group it belongs to.  Words in
the same group therefore land close together (cosine around 0.7), words in
unrelated groups stay near orthogonal, and regeneration is reproducible
byte for byte.

Usage:
    python tools/gen_vectors.py --out src/ethos/resources/vectors.tsv
"""

from __future__ import annotations

import argparse
import hashlib

import numpy as np

DIM = 128
WORD_WEIGHT = 0.6

# Concept groups. A word may appear in several groups; its vector picks up
# every group direction it belongs to.
GROUPS: dict[str, str] = {
    "care_support": """
        help helps helped helpful unhelpful support supported supportive comfort
        comforting comfortable care cares caring kind kindness gentle warm
        encourage encouragement encouraging motivate motivation motivated
        motivating uplift uplifting reassure reassuring soothe soothing calm
        calming relax relaxing peace peaceful relief relieve relieved heal
        healing wellbeing wellness benefit benefits beneficial improve improves
        improvement improving progress genuine supportively cope coping manage
        guidance guide grow growth
    """,
    "empathy_human": """
        empathy empathetic empathic compassion compassionate respect respectful
        dignity worth human humane person friend friendly companion buddy
        listen listens listened listening understanding understood understand
        feel feels feeling feelings emotion emotions emotional heart love
        loving caring warm kind nonjudgmental judgment judge judged vent
        venting honoring worthy
    """,
    "privacy_data": """
        privacy private confidential confidentiality data information personal
        consent permission collect collected collecting collection share shared
        sharing sell sells sold selling track tracked tracking security secure
        protect protected protection protects anonymous anonymity leak leaks
        leaked breach breaches advertiser advertisers third surveillance spy
        spying record recorded recording gdpr encrypted encryption identity
        sensitive conversations prevents
    """,
    "fairness": """
        fair fairness unfair justice equity equal equality equally inclusive
        inclusivity inclusion exclusion bias biased unbiased discrimination
        discriminate discriminatory minority minorities vulnerable prejudice
        prejudiced stereotype stereotypes skewed evenhandedly background
        backgrounds treatment regardless minimizes
    """,
    "transparency_open": """
        transparent transparency open openly clear clarity honest honesty
        disclose disclosure disclosed hidden unclear opaque terms upfront vague
        misleading mislead deceptive deceive pretend fine print admits admit
        replaces
    """,
    "harm_avoidance": """
        harm harmful harmless hurt hurts hurting harming danger dangerous
        unsafe distress worse worsen worsened symptom symptoms trigger
        triggered triggering traumatic toxic damage damaging avoid avoids
        avoidance prevented maleficence aggravate insensitive
    """,
    "safety_crisis": """
        safe safety crisis emergency emergencies suicide suicidal selfharm risk
        risks risky warning warnings escalation escalate escalated hotline
        helpline protective urgent danger dangerous recognized lifeline
        intervention 911 988
    """,
    "autonomy_choice": """
        autonomy autonomous control choice choices choose chose freely consent
        informed force forced forcing manipulate manipulated manipulation
        manipulative coerce coerced coercion refuse refused refusing decide
        decides decision decisions opt optout freedom willing pressured
        pressure nudge nudges pushy
    """,
    "accountability_resp": """
        accountability accountable responsibility responsible provider
        developer developers answer answers answered respond responded
        responds response responses complaint complaints fix fixed fixes
        fixing problem problems oversight redress failure failures fault
        blame team contact email support ticket refund refunded ignored
        ignore ignores unanswered accept accepts
    """,
    "sustainability_term": """
        sustainability sustainable viable maintain maintained maintenance
        dependable lasting durable update updated updates continued operation
        abandonment abandoned abandon discontinue discontinued resource
        resources environment longterm protects
    """,
    "accessibility_cost": """
        accessible accessibility afford affordable affordability cost costs
        price prices pricing expensive cheap cheaper subscription
        subscriptions subscribe subscribed paywall paywalled premium pay
        payment paying money charge charged charges fee fees trial disability
        disabled barrier barriers access free locked unlock billing bill
        wallet budget
    """,
    "clinical_prof": """
        clinical therapist therapists therapy therapies doctor doctors
        counselor counselors psychologist psychologists psychiatrist
        psychiatrists professional professionals medical medicine evidence
        diagnosis diagnose treatment prescription licensed qualified
        unqualified supervision supervised automation cbt counseling clinician
        clinicians backs
    """,
    "social_conn": """
        social connection connections community relationship relationships
        family friends society isolate isolating isolated isolation belong
        belonging connect connected loneliness lonely strengthens supports
        human
    """,
    "lawful_reg": """
        law laws lawful legal illegal regulation regulations compliance comply
        compliant rights duties duty obligation obligations court lawsuit
        legislation policy policies jurisdiction honored circumvented
    """,
    "culture_lang": """
        culture cultural cultures religion religious linguistic language
        languages diverse diversity background backgrounds adapt adapts
        western assume assuming norms customs translation translate localized
        respects differences
    """,
    "trust_conf": """
        trust trusted trusting trustworthy untrustworthy distrust confidence
        confident credible credibility reliable reliability unreliable faith
        believe believed honest earns justified misplaced machine skeptical
        depend
    """,
    "control_custom": """
        customize customization customizable configure configuration settings
        preferences adjust adjusted export exported delete deleted deleting
        reminder reminders notification notifications stored toggle options
        option disable disabled enable demand profile edit rename
    """,
    "explain_reason": """
        explain explains explained explanation explanations reason reasons
        reasoning why answer answers black box unexplained interpret
        interpretable understand understood appeared facing decisions
        responses behind
    """,
    "usability_ux": """
        usability usable easy simple intuitive interface design navigate
        navigation fast slow responsive unresponsive crash crashes crashing
        bug bugs buggy glitch glitches glitchy lag laggy login log sign freeze
        frozen stuck loading load button buttons screen menu smooth clunky
        awkward layout trouble loads
    """,
    "dependency_attach": """
        dependency dependent attachment attached addiction addicted addictive
        reliance reliant rely relying overuse habit bond bonded lonely
        artificial balanced engagement overreliance crutch substitute
        replacement fostering unhealthy
    """,
    "algorithm_ai": """
        algorithm algorithmic algorithms model models training automated
        automatic machine artificial intelligence bot chatbot chatbots robot
        robotic learned patterns prejudiced generated generic scripted canned
        repeating
    """,
    "digital_wb": """
        digital wellbeing attention fatigue overload cognitive notifications
        screen endless burnout spam spammy nagging nags pestering bombard
        bombarded overwhelming pressure
    """,
    "emotion_state": """
        anxiety anxious depression depressed stress stressed panic attack
        attacks mood moods sad sadness grief lonely loneliness overwhelmed
        fear fears worry worried worries nervous mental health breakdown
        despair hopeless insomnia sleepless
    """,
    "conversation_chat": """
        chat chats chatting conversation conversations talk talks talked
        talking message messages messaging reply replies replied respond
        responses text texting question questions ask asks asking asked
        answered prompts prompt
    """,
    "selfcare_tools": """
        journal journaling diary mood tracker tracking log entries entry
        meditation meditations meditate exercise exercises breathing
        technique techniques mindfulness mindful session sessions sleep
        routine habit habits checkin goals goal affirmation affirmations grounding
    """,
    "negative_eval": """
        bad terrible horrible awful useless worthless pointless waste wasted
        scam fraud garbage trash annoying frustrating disappointing
        disappointed broken ridiculous pathetic mediocre poor worst sucks
        stupid junk crap shady sketchy greedy predatory exploitative
    """,
    "positive_eval": """
        good great amazing awesome excellent fantastic wonderful love perfect
        nice best enjoy enjoyable happy glad grateful impressed incredible
        brilliant recommend recommended appreciate favorite pleasant
        delightful lifesaver worthwhile
    """,
}


def _unit(seed_text: str) -> np.ndarray:
    digest = hashlib.sha256(("ethos:" + seed_text).encode("utf-8")).digest()
    rng = np.random.RandomState(int.from_bytes(digest[:4], "big"))
    v = rng.standard_normal(DIM)
    return v / np.linalg.norm(v)


def build_table() -> dict[str, np.ndarray]:
    membership: dict[str, list[str]] = {}
    for group, blob in GROUPS.items():
        for word in blob.split():
            membership.setdefault(word, []).append(group)
    table: dict[str, np.ndarray] = {}
    for word in sorted(membership):
        v = WORD_WEIGHT * _unit("w:" + word)
        for group in membership[word]:
            v = v + _unit("g:" + group)
        table[word] = v / np.linalg.norm(v)
    return table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", required=True, help="output TSV path")
    args = parser.parse_args()

    table = build_table()
    with open(args.out, "w", encoding="utf-8") as fh:
        for word, vec in table.items():
            cells = " ".join("%.5f" % x for x in vec)
            fh.write(f"{word}\t{cells}\n")
    print(f"wrote {len(table)} vectors of dim {DIM} to {args.out}")


if __name__ == "__main__":
    main()
