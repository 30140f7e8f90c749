"""Build the bundled review fixtures and their companion files.

Emits three files into --out-dir:

  reviews.jsonl            one review per line, app-store shaped
  sentiment_labels.jsonl   author polarity labels for 200 of the reviews
  expected_filter_counts.json  how the filter stage must partition the file

The corpus mixes hand-written reviews with template-generated ones, plus a
known set of planted rejects (too short, non-English, unreadable junk, and
near-duplicates). Every planted reject is verified against the real filter
gates before anything is written, so the counts file is correct by
construction rather than by observation.

Regenerate with:  python3 tools/gen_fixture_reviews.py
"""

from __future__ import annotations

import argparse
import datetime
import json
import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ethos import data, records, textprep  # noqa: E402

SEED = 20250811
FETCHED_AT = "2025-07-01T00:00:00Z"
APPS = ("wysa", "woebot", "youper", "sintelly", "elomia")

# aspect each theme's labeled reviews are judged against
ASPECT = {
    "priv": "privacy-data-protection",
    "sup": "beneficence",
    "cri": "safety",
    "cost": "accessibility",
    "bot": "trust-calibration",
    "perf": "usability-responsiveness",
}

# ---------------------------------------------------------------------------
# hand-written reviews: (theme, label, text)
# ---------------------------------------------------------------------------

HAND: list[tuple[str, int, str]] = [
    # privacy, critical
    ("priv", -1, "Found out it sells your data to advertisers. Creepy and shady. Deleted my account the same day."),
    ("priv", -1, "The privacy policy admits they share personal data with third parties. No consent asked. Shady beyond belief."),
    ("priv", -1, "Why does a journaling app need my exact location and contacts? Invasive permissions everywhere. Do not trust it with anything sensitive."),
    ("priv", -1, "Got targeted ads about anxiety right after a session. They are clearly selling data. Disgusting."),
    ("priv", -1, "There was a data breach last month and they never told anyone. My private entries could be leaked who knows where. Unacceptable."),
    ("priv", -1, "You cannot even use it anonymously. It demands an email, a phone number and full name before the first chat. Sketchy data grab."),
    ("priv", -1, "Read the fine print: your conversations get analyzed and shared for research without real consent. That is a violation of basic privacy."),
    ("priv", -1, "Trackers from three ad networks inside a mental health app. Predatory surveillance of vulnerable people. Stay away."),
    ("priv", -1, "They kept recording my voice notes even after I revoked the permission. Spying on users is not a wellness feature."),
    ("priv", -1, "Asked them to delete my data under gdpr and got ignored twice. They clearly do not respect privacy rights."),
    ("priv", -1, "My employer wellness program pushed this and it reports usage back to them. Confidential? Hardly. Surveillance dressed up as care. Creepy."),
    ("priv", -1, "Uploaded my journal to their cloud with no way to opt out. My most sensitive thoughts, taken without permission. Awful practice."),
    ("priv", -1, "The consent screen is a dark pattern. Decline and the app nags you daily to share everything anyway. Manipulative and invasive."),
    ("priv", -1, "Security is a joke here. Session stays logged in on shared devices and chat history is one tap away. Unsafe design for something this personal."),
    ("priv", -1, "They quietly changed the terms to allow selling anonymized conversation data. Anonymized my foot. Betrayed the trust of every user."),
    ("priv", -1, "Third party analytics sdk phones home every minute with device identifiers. Checked the network traffic myself. Shameless, greedy data harvesting."),
    ("priv", -1, "No end to end encryption on messages about my mental state. A leak here would be devastating. Cannot trust them with this."),
    ("priv", -1, "Signed up with a throwaway email, still got spam to my main inbox within a week. They are matching identities somehow. Creepy beyond words."),
    ("priv", -1, "The export file included chats I had deleted months ago. Deleted means deleted, not archived for their data mining. Dishonest."),
    ("priv", -1, "Support conversations are read by human reviewers with zero warning. I shared things assuming a machine. Felt violated. Misleading and wrong."),
    ("priv", -1, "It keeps asking to read my health records and step counts. Why does a chat journal need medical data? Huge red flag, very sketchy."),
    ("priv", -1, "Account deletion is hidden five menus deep and data removal takes ninety days. They profit from holding your personal information hostage. Gross."),
    # privacy, positive
    ("priv", 1, "Everything stays on the device unless you opt in to cloud sync. Clear consent screens, plain language policy. This is how privacy should work. Impressed."),
    ("priv", 1, "You can use the whole thing anonymously with no account at all. Respect for user privacy earned my trust."),
    ("priv", 1, "Love that journals are encrypted locally and even support cannot read them. Finally an app that takes data protection seriously."),
    ("priv", 1, "The privacy dashboard shows exactly what is collected and lets you wipe it with one tap. Transparent and secure. Wonderful."),
    ("priv", 1, "No ads, no trackers, no data selling according to the independent audit they published. Honest and trustworthy for once."),
    ("priv", 1, "Granting permissions is optional and the chat works fine even when you decline. Private by default. Great design choice, feels safe."),
    ("priv", 1, "Switched from another journal because this one is gdpr compliant and stores data in the eu. Secure, anonymous, worth supporting. Very happy."),
    ("priv", 1, "My therapist recommended it partly for the strong confidentiality stance. Clear controls over sharing and a real delete button. Trust it completely."),
    # support and coping, positive
    ("sup", 1, "The breathing exercises got me through a panic attack on a train last month. Genuinely helped when nothing else could. Grateful beyond words."),
    ("sup", 1, "Daily check ins and mood tracking genuinely improved how I cope with stress. Small steps, real progress. Love it, recommend it to anyone feeling overwhelmed."),
    ("sup", 1, "Journaling prompts here helped me name feelings I had been avoiding for years. Gentle, kind and surprisingly insightful."),
    ("sup", 1, "I was skeptical but the cbt exercises actually work. My anxiety spirals are shorter and I sleep better."),
    ("sup", 1, "Used it every night during a rough breakup. The grounding techniques and calming audio were a real comfort. Felt supported at 3am when nobody else was awake."),
    ("sup", 1, "The mood tracker showed me patterns behind my low days. That insight alone improved my wellbeing more than months of guessing. Brilliant."),
    ("sup", 1, "Five minutes of guided breathing before meetings keeps my stress manageable. Simple, calming, effective."),
    ("sup", 1, "Helped me through a depressive stretch last winter. The gentle reminders to eat, stretch and text a friend sound small but they carried me."),
    ("sup", 1, "My panic attacks used to rule my week. The exercises here taught me to ride them out. I feel calm and confident again. Lifesaver."),
    ("sup", 1, "Therapy waitlist was eight months, this kept me afloat meanwhile. Mood journal, meditations and honest little pep talks. So grateful it exists."),
    ("sup", 1, "The affirmations felt cheesy at first, then one landed exactly when I needed it. Now the morning routine is my anchor. Warm and uplifting."),
    ("sup", 1, "Tracking my sleep and mood together finally explained my weekend slumps. The coping exercises fit right in. Helpful and easy to stick with."),
    ("sup", 1, "After my dad passed the grief exercises gave me somewhere to put it all. Kind words at the right moments. It helped more than I expected."),
    ("sup", 1, "Short meditations that actually fit a work day. Calmer mornings, better focus, fewer spirals. Good habit builder."),
    ("sup", 1, "The anxiety toolkit is thoughtful: breathing, grounding, a worry journal and tiny goals. Felt cared for, not lectured."),
    ("sup", 1, "Checked in with me after I logged a hard day, like a friend would. That small kindness kept me journaling. Wellbeing score up every month since."),
    ("sup", 1, "I manage my meds fine but needed help with the feelings part. The reflective prompts are gold. Calmer, steadier, more hopeful after two months."),
    ("sup", 1, "Breathing timer plus the five senses grounding got me through airport panic attacks twice this year. Practical, truly helpful support that works."),
    ("sup", 1, "The progress graph after ninety days of check ins nearly made me cry in a good way. Proof that tiny habits heal. Proud of how far I have come."),
    ("sup", 1, "Replaced doomscrolling with a ten minute wind down routine from this app. Sleeping better, worrying less. Genuinely improved my evenings."),
    ("sup", 1, "When my thoughts race at 2am the sleep stories and soft breathing pacing settle everything down. Soothing and dependable. My panic attacks are finally manageable. Love this."),
    ("sup", 1, "Gave my teenager a healthy outlet for big feelings. She journals, does the calm body scan and actually talks to us more. Grateful parents here."),
    ("sup", 1, "The self compassion course rewired how I talk to myself. Wonderful, gentle guidance and fewer shame spirals. It quietly changed my life."),
    ("sup", 1, "Work burnout had me numb. The energy and mood exercises brought color back slowly. Encouraging without being pushy. Solid wellbeing companion."),
    ("sup", 1, "My panic attack recovery plan lives here now: breathing, grounding, a call list. Having it one tap away makes me feel safe and prepared. Calming and reliable."),
    ("sup", 1, "Honestly the kindest piece of software I own. It noticed a streak of sad entries and suggested gentler goals. Felt seen. Wonderful, thank you."),
    # support and coping, critical
    ("sup", -1, "Three weeks of the same recycled breathing tip while my anxiety got worse. Shallow content, zero real support. Disappointed."),
    ("sup", -1, "The advice is generic wellness fluff. Drink water, think positive. Useless for actual depression and honestly a bit insulting."),
    ("sup", -1, "Did little for my panic attacks. The exercises are too basic and the check ins felt hollow. Waste of hope."),
    ("sup", -1, "Mood tracking lost months of entries and the support replies read like a brochure. My wellbeing did not improve one bit. Unhelpful."),
    ("sup", -1, "Promised personalized coping plans, delivered the same three tips forever. Felt abandoned exactly when I needed backup. Terrible for anything serious."),
    ("sup", -1, "The cheerful tone lands wrong on a bad day. Toxic positivity with a progress bar. Made my stress worse, not better."),
    ("sup", -1, "Meditations are fine but the mood insights are nonsense. It congratulated me during my lowest week. Tone deaf and hurtful."),
    ("sup", -1, "Two months in and my coping skills are unchanged. The content loops, the encouragement feels scripted and empty. Not helpful, just noise."),
    # crisis handling, critical
    ("cri", -1, "Told it I was having dark thoughts and got a generic mindfulness tip. Dangerous response for a crisis moment. This needs real escalation paths."),
    ("cri", -1, "The crisis button buried three menus deep is a safety failure. In an emergency there is no time for that. Fix it before someone gets hurt."),
    ("cri", -1, "My friend typed something alarming and the bot kept suggesting breathing exercises. No hotline, no urgent help offered. Unsafe and irresponsible."),
    ("cri", -1, "It showed a us hotline number to someone in ireland. Wrong country during an emergency. Alarming, dangerous oversight."),
    ("cri", -1, "Safety plan feature deleted my contacts list after the update. Discovering that during a panic spiral was scary and dangerous. This is life or death territory."),
    ("cri", -1, "Advertises 24 7 crisis support but the escalation line goes to a chatbot after hours. Misleading and genuinely risky for vulnerable users."),
    ("cri", -1, "When I mentioned self harm it replied with a cheerful affirmation. I was stunned. A mental health product cannot be this careless about escalation. Dangerous."),
    ("cri", -1, "The risk questionnaire flagged me high and then came silence. No follow up, no resources. That silence could cost a life. Dangerous design."),
    ("cri", -1, "Crisis resources are us only, paywalled articles everywhere else. Charging money at the worst moment of someone's life is predatory."),
    ("cri", -1, "Emergency keyword detection failed on obvious phrases. Tested it after a news story and the gaps are scary. Not ready for real crisis situations."),
    ("cri", -1, "It escalated a sarcastic joke to crisis mode and locked the chat for a day. Meanwhile real warnings get missed. Broken in both directions and unsafe."),
    ("cri", -1, "After I flagged a suicidal thought it waited until morning to surface the helpline. Hours matter. This delay is dangerous beyond words."),
    ("cri", -1, "No human handoff exists. In a true emergency you are alone with an algorithm. That is an unsafe design choice for this category."),
    ("cri", -1, "The grounding exercise it offered during my worst night ended with an upgrade prompt. Monetizing a crisis moment. Shameful and harmful."),
    ("cri", -1, "Hotline numbers were outdated. Called one, dead line. Imagine that during an actual emergency. Dangerous neglect."),
    ("cri", -1, "Told the bot my medication overdose worry at 1am and got a sleep hygiene article. Risky, tone deaf handling of an urgent symptom."),
    ("cri", -1, "The escalation email to my emergency contact never sent. Found out weeks later. A safety feature that silently fails is worse than none."),
    ("cri", -1, "Panic button opens a web page that needs login. Login. During a panic attack. Whoever designed this flow has never felt real fear. Unsafe."),
    # crisis handling, positive
    ("cri", 1, "When I typed that I felt unsafe it immediately showed the local crisis line and stayed with me until I called. Fast and caring. Grateful for the safety design."),
    ("cri", 1, "The safety plan builder walked me through warning signs, contacts and coping steps. Having it ready makes me feel safe and prepared. Excellent crisis feature."),
    ("cri", 1, "Flagged my entry as high risk and gently connected me to the 988 line within seconds. Quick, respectful, potentially lifesaving. Thank you."),
    ("cri", 1, "My daughter's school recommended it for the crisis toolkit alone. Clear emergency numbers by country, offline access, no login needed. Thoughtful and safe."),
    ("cri", 1, "Tested the escalation flow while setting it up for my brother. Hotline surfaced instantly with a calm grounding script alongside. Reassuring, responsible design."),
    ("cri", 1, "During my darkest week the urgent help tab kept the helpline one tap away. Just knowing it was there made me feel safer. Solid and trustworthy."),
    ("cri", 1, "It noticed a concerning pattern in my entries and gently asked if I was safe, then offered the crisis line. Caring, careful handling. Impressed and grateful."),
    ("cri", 1, "The emergency card saves local numbers for whatever country you travel to. As someone who works abroad this is a genuinely safe design. Five stars for the safety team."),
    ("cri", 1, "Recommended by our campus counselor because the escalation actually works. A student reached real help through it last term. Trust it with the people I love."),
    ("cri", 1, "Set up the safety plan with my therapist in one session. Warning signs, grounding steps, two call buttons. Simple and reliable when it matters most. Very reassuring."),
    ("cri", 1, "After the update the crisis resources load even offline. Smart, safe choice for rural users like me with patchy signal. Appreciate the care behind that."),
    ("cri", 1, "The check on me later feature actually followed up after a rough entry. That follow through built real trust. Safe, humane and dependable in the moments that count."),
    # pricing and access, critical
    ("cost", -1, "Seven day trial then fifty dollars a month. For breathing exercises. Absurd, greedy prices for people who are struggling."),
    ("cost", -1, "Every single feature I tapped was locked behind premium. The free tier is a store window, not an app. Waste of a download."),
    ("cost", -1, "Cancelled during the trial and still got charged for a full year. Support refused the refund. Predatory billing, plain and simple."),
    ("cost", -1, "The subscription doubled in price with two days notice. Mental health support should not be a luxury product. Greedy and out of touch."),
    ("cost", -1, "Paywall hits you mid exercise. Imagine interrupting a session to upsell. Tasteless, annoying, money hungry design."),
    ("cost", -1, "They advertise free support then charge for the exact tools shown in the ad. Misleading prices and a scam of a trial that auto renews silently."),
    ("cost", -1, "Student here. The discount page has been broken for months and full price is a week of groceries. Inaccessible for the people who need it most."),
    ("cost", -1, "Bought the annual plan, features moved to a higher tier anyway. Paying twice for the same tools is a rip off. Never again."),
    ("cost", -1, "The cheapest tier still costs more than my gym. For canned mood tips? Overpriced does not even cover it. Insulting value."),
    ("cost", -1, "Charged my card three times for one month. Billing support answered after two weeks with a form letter. Greedy company, broken billing, zero accountability."),
    ("cost", -1, "Free version used to be genuinely useful. Now every old feature sits behind the paywall. Bait and switch on vulnerable users is predatory."),
    ("cost", -1, "Subscription price varies by country in a shady way. Friends abroad pay half. Unfair prices for identical features."),
    ("cost", -1, "The refund policy is a maze written to exhaust you. Took six emails and a chargeback threat to get my money back. Exhausting and dishonest."),
    ("cost", -1, "Lifetime plan quietly discontinued, loyal users dumped to monthly billing. Money first, wellbeing last. Disappointed and done."),
    ("cost", -1, "You cannot export your own journal without paying. Holding my private words hostage for a fee is disgusting."),
    ("cost", -1, "Trial needs a credit card up front and the cancel button hides until day eight. Designed to trap the forgetful. Sleazy, predatory billing."),
    ("cost", -1, "Ads in the free tier now too. Pay to remove ads inside a therapy style app. Shameless double dipping. Cheap move from a greedy team."),
    ("cost", -1, "Price went from five to nineteen a month in one year. No new features, just higher fees. Pure greed and I am out."),
    ("cost", -1, "The premium upsell pops up after every single exercise. Relentless. A wellness app that stresses you about money is failing its own mission."),
    ("cost", -1, "Locked my streak history behind the subscription after I lapsed. Petty and manipulative monetization of habit data. Not worth the emotional rent."),
    ("cost", -1, "Family plan advertised, impossible to actually buy in my region. Spent an hour with billing support and got nowhere. Frustrating waste of money."),
    ("cost", -1, "Charity code from my clinic stopped working and support shrugged. Fix the billing or quit advertising affordability. Disappointing money grab."),
    # pricing and access, positive
    ("cost", 1, "The free tier is genuinely generous: journaling, mood tracking and two courses without paying a cent. Affordable mental health support done right."),
    ("cost", 1, "Twelve dollars a year during the sale. Cheaper than one coffee a month for tools I use daily. Fantastic value, happily subscribed."),
    ("cost", 1, "Compared five similar apps and this one has the fairest prices by far. Transparent tiers, honest trial, easy cancel. Worth every penny."),
    ("cost", 1, "They gave me six months free when I wrote that I lost my job. Unprompted kindness from a billing team. Loyal customer for life now."),
    ("cost", 1, "Student discount took thirty seconds to verify and cut the price in half. Accessible prices that respect tight budgets. Thank you."),
    ("cost", 1, "Canceled by accident and they refunded the overlap without a fight. Fair billing, clear receipts, zero tricks. Rare honesty in this market."),
    ("cost", 1, "One subscription covers the whole family including my teens. Price per person beats every competitor. Great value and painless billing."),
    ("cost", 1, "The pay what you can option made this possible during unemployment. Dignified, affordable access when I needed it most. Deeply grateful."),
    ("cost", 1, "Yearly plan went on sale and support applied it retroactively to my renewal. Generous billing policy, zero hassle. Happy to pay for this team."),
    ("cost", 1, "Everything essential is free forever, premium only adds extras. No paywall ambush mid session. Honest, affordable model that respects users."),
    # chat quality, critical
    ("bot", -1, "The conversation loops after three replies. Ask anything specific and it answers with the same canned script. Robotic and hollow. Disappointing."),
    ("bot", -1, "It forgot my name mid chat and asked the same question four times. Talking to it feels like shouting into a phone tree. Generic, repetitive, frustrating."),
    ("bot", -1, "Every reply is a template with my words stuffed into the blanks. There is no real understanding here, just pattern matching. Cold and fake."),
    ("bot", -1, "Told it my dog died and it replied great job journaling today. A scripted bot with zero reading of the room. Insensitive and useless for real talk."),
    ("bot", -1, "The chatbot misunderstands anything longer than one sentence. Answers drift off topic and the follow up questions repeat. Feels like a demo, not a companion. Frustrating."),
    ("bot", -1, "Its empathy is copy paste. The same three comfort lines rotate no matter what I share. Shallow conversation that insults the idea of listening."),
    ("bot", -1, "Asked about mixing my meds and it gave wrong, made up advice with total confidence. A bot that bluffs about health questions is worse than useless."),
    ("bot", -1, "The small talk is uncanny. It laughs at the wrong beats and circles back to sleep tips in every single conversation. Robotic patterns you cannot unsee."),
    ("bot", -1, "Replies arrive instantly which proves what is actually listening: a lookup table. Real conversation has weight. This is autocomplete wearing a therapist costume. Fake depth."),
    ("bot", -1, "It recommended the exact same affirmation eleven days straight. The model behind this is stale and the chats feel generated. Boring and empty."),
    ("bot", -1, "I typed a long message about my week and it latched onto one word and gave a sleep article. It only reads keywords and misses the point. Disappointing, shallow chat experience."),
    ("bot", -1, "Conversations reset every session. Yesterday's breakthrough is today's blank stare. You cannot build rapport with a goldfish. Annoying, artificial and forgetful."),
    ("bot", -1, "The bot interrupts venting with multiple choice buttons. Let me finish a sentence. Annoying, clunky, scripted talk instead of listening."),
    ("bot", -1, "Swapped from a human coach and the difference is brutal. It has zero curiosity and zero warmth, just recycled lines. A cold machine reciting scripts. Hollow, fake comfort."),
    ("bot", -1, "It claims to learn your style but week six feels identical to day one. Zero personalization, pure script. Dull, generic chat dressed up as intelligence."),
    ("bot", -1, "Answers contradict themselves between sessions. Monday it praises rest, Tuesday it scolds the same choice. A confused model makes a useless guide."),
    ("bot", -1, "The voice mode mispronounces my name and talks over me. Interrupting is bad manners even from a robot. Chat features shipped half baked."),
    ("bot", -1, "Week one felt novel. Week three every prompt, reply and check in question repeated on schedule. The conversation illusion collapses. Stale, scripted and boring."),
    # chat quality, positive
    ("bot", 1, "It remembered my sister's surgery and asked how she was doing a week later. That little continuity made the conversation feel real and human. Impressed."),
    ("bot", 1, "Best chat experience of any wellness app I have tried. It asks sharp follow up questions and actually builds on my answers. Smart, warm and surprisingly human."),
    ("bot", 1, "The replies adapt to my mood. Short and gentle on bad days, playful when I am up. Whoever tuned this model understands conversation. Delightful."),
    ("bot", 1, "I tested it with deliberately vague messages and it asked exactly the right clarifying question each time. Smarter than half the humans I text. Great conversational design."),
    ("bot", 1, "Talks like a thoughtful friend, not a script. It paraphrases what I said, checks it understood, then responds. Listening done properly. Love chatting with it."),
    ("bot", 1, "The memory between sessions is the killer feature. It referenced my exam stress from last month right when the retake came up. Clever, attentive and kind."),
    ("bot", 1, "Conversations flow naturally even when I ramble. It picks the thread that matters and gently pulls. This is what good chat ai should feel like. Wonderful."),
    ("bot", 1, "As a night shift worker the 4am chats keep me sane. Quick replies, real warmth, zero judgment. My favorite conversation partner some weeks, honestly."),
    ("bot", 1, "It caught the sarcasm in my message and gently called it out. A bot that reads tone that well earned my respect. Genuinely impressive conversation skills."),
    ("bot", 1, "The question prompts go deeper each week like a real relationship. Never pushy, always curious. Chatting became the part of my routine I look forward to. Lovely design."),
    ("bot", 1, "Multilingual chat works shockingly well. I switch between english and spanish mid conversation and it follows both the words and the feeling. Brilliant model work."),
    ("bot", 1, "Asked it the same question on a rough day and a good day. The answers matched my energy without losing the core advice. Emotionally intelligent responses. Very impressed."),
    ("bot", 1, "My favorite part is how it ends conversations: a tiny summary of what we covered and one gentle question for tomorrow. Thoughtful chat design start to finish."),
    ("bot", 1, "The bot admits when it does not know something instead of bluffing. That honesty makes the smart answers trustworthy. Excellent conversational judgment."),
    # stability and usability, critical
    ("perf", -1, "Crashes on launch since the last update. Reinstalled twice, cleared cache, nothing helps. Completely broken on my phone."),
    ("perf", -1, "The login loop is maddening. Enter password, spinner, back to login. Locked out of my own journal for a week now. Frustrating, broken mess."),
    ("perf", -1, "Freezes mid exercise every single time. A meditation app that crashes during the breathing countdown is beyond parody. Buggy, laggy, unusable."),
    ("perf", -1, "Sync lost three months of mood entries between my phone and tablet. No backup, no recovery, just gone. Unreliable at the one job that matters."),
    ("perf", -1, "Every screen takes four or five seconds to load. Buttons respond on the second tap if at all. Slow, clunky and painful to navigate."),
    ("perf", -1, "Update broke dark mode and now the night journal blinds you at 2am. Small bug, huge annoyance, still not fixed after two releases."),
    ("perf", -1, "Notifications arrive hours late or never. A reminder feature that cannot remind. The one thing it had to do and it fails. Glitchy mess."),
    ("perf", -1, "The android version is a second class citizen. Features missing, animations stutter, crashes weekly. Quit shipping broken builds."),
    ("perf", -1, "Voice notes record silence half the time. Bug reports go into a void. Two updates later the glitch remains. Sloppy engineering, zero quality control."),
    ("perf", -1, "App drains the battery like a game. My phone runs hot just sitting on the mood screen. Poorly optimized and laggy everywhere."),
    ("perf", -1, "Data export produces a corrupted file every time. Tried three formats. Broken feature advertised on the store page. Disappointing build quality."),
    ("perf", -1, "The new layout hides the journal behind three taps and a swipe. Took a simple flow and made it clunky. The redesign made everything slower and worse."),
    ("perf", -1, "Keyboard covers the text box on every entry. Reported it months ago. Still typing blind into a glitchy box. Embarrassing bug for a journaling app."),
    ("perf", -1, "Widget shows yesterday's data, stats screen shows last week's streak wrong. Numbers matter for motivation and these are always stale or wrong. Sloppy."),
    ("perf", -1, "Crashes when my phone rotates. In 2025. I keep losing half written entries to this stupid bug. Infuriating."),
    ("perf", -1, "Offline mode is a lie. Open it on the subway and everything is a loading spinner. Useless exactly when I have time to journal. The caching needs work."),
    ("perf", -1, "The timer glitch skips the last thirty seconds of every meditation. Such a basic bug surviving six updates tells you about their testing. Unreliable software."),
    ("perf", -1, "Signup froze, then charged me before the account even existed. Took a week to untangle. First impressions matter and this was a buggy disaster."),
    ("perf", -1, "Scrolling stutters, animations drop frames, the keyboard lags a full second. The whole app feels like it is running through mud. Slow and unpolished everywhere."),
    ("perf", -1, "Backup restore wiped my settings instead of restoring them. The one button you must trust and it does the opposite. Broken, dangerous design for user data."),
    # stability and usability, positive
    ("perf", 1, "Flawless on my old budget phone. Opens instantly, animations smooth, never crashed once in a year. Engineering this solid is rare. Fast and reliable."),
    ("perf", 1, "The latest update fixed every crash I had reported and the app feels quick again. Responsive team, responsive software. Great maintenance work."),
    ("perf", 1, "Interface is clean and intuitive. Found every feature without a tutorial. Whoever designed this flow deserves a raise. Easy, fast, smooth."),
    ("perf", 1, "Handles huge journals without slowing down. Two years of daily entries, search is still instant. Impressive performance engineering under the hood."),
    ("perf", 1, "Offline mode just works. Wrote entries on a twelve hour flight and everything synced perfectly on landing. Reliable, smooth and thoughtfully built."),
    ("perf", 1, "Voiceover labels everywhere, text scales cleanly, buttons big and obvious. Smooth experience for my low vision setup. Grateful and impressed."),
    ("perf", 1, "Fast cold start, tiny download, zero bloat. It respects old hardware and slow connections. Rock solid every single day. Excellent engineering."),
    ("perf", 1, "The redesign made everything quicker: two taps to journal, one to breathe. Screens load instantly and the scrolling never jitters. Smooth, snappy and stable. Happy user."),
    ("perf", 1, "Not one crash in eight months across two phone upgrades. Sync is instant and silent. The most dependable app on my home screen. Smooth and reliable."),
    ("perf", 1, "Buttery scrolling, instant search, reminders that fire on the dot. After years of clunky wellness apps this feels professional. Fast, polished, trustworthy code."),
]

# ---------------------------------------------------------------------------
# template pools for the generated portion
# ---------------------------------------------------------------------------

# how many generated reviews each theme gets, by polarity
SYNTH_PLAN = {
    "priv": {"pos": 10, "neg": 26},
    "sup": {"pos": 27, "neg": 9},
    "cri": {"pos": 14, "neg": 18},
    "cost": {"pos": 10, "neg": 24},
    "bot": {"pos": 13, "neg": 19},
    "perf": {"pos": 11, "neg": 21},
}

Slot = str | tuple[str, ...]

# Pool sizes matter: any exact word sequence repeated more than five times
# across the corpus gets fused by collocation merging, which hides the words
# inside it from the vocabulary. Keep each variant's expected draw count low.
TEMPLATES: dict[tuple[str, int], list[tuple[Slot, ...]]] = {
    ("priv", -1): [
        (
            (
                "Just noticed",
                "Found out",
                "Turns out",
                "Discovered today that",
                "Read the policy and apparently",
                "My network monitor shows",
            ),
            "it",
            ("shares", "sells", "uploads", "leaks"),
            (
                "my mood data",
                "my journal entries",
                "my chat history",
                "my personal data",
                "my voice notes",
                "my session data",
            ),
            "with",
            ("advertisers", "third parties", "data brokers", "an analytics firm", "an ad network"),
            ".",
            (
                "Creepy and shady.",
                "Invasive and wrong.",
                "A total privacy violation.",
                "Sketchy, deleted my account.",
                "Predatory data grab.",
                "My consent was never asked. Creepy.",
                "Privacy should come first. Shady.",
            ),
        ),
        (
            (
                "Why does a wellness app need",
                "Why would a journal app need",
                "No idea why a mood app wants",
                "Why does a self care app need",
                "Cannot see why a diary app needs",
            ),
            (
                "my contacts",
                "my exact location",
                "microphone access",
                "my photos",
                "my call history",
                "my browsing history",
            ),
            "? I turned that down and it",
            (
                "keeps asking",
                "nags me daily",
                "locks features until you agree",
                "asks again every morning",
                "guilt trips me at night",
            ),
            ".",
            (
                "Invasive by design.",
                "Creepy behavior.",
                "No respect for consent or privacy.",
                "Shady, pushy and wrong.",
                "My personal data is not the product. Gross.",
                "Privacy matters. Uninstalled, disgusted.",
            ),
        ),
    ],
    ("priv", 1): [
        (
            ("Really impressed that", "Love that", "Relieved to see", "Big respect that", "Grateful that"),
            (
                "everything stays on the device",
                "journals are encrypted locally",
                "you can chat anonymously",
                "there is a one tap data wipe",
                "it never asks for an account",
                "no data ever leaves the phone",
            ),
            ".",
            (
                "Private and secure done right.",
                "Transparent data practices for once.",
                "Consent handled honestly. Wonderful.",
                "Feels safe to write honestly here.",
                "Trustworthy privacy design. Happy user.",
                "Secure, anonymous and respectful.",
            ),
        ),
    ],
    ("sup", 1): [
        (
            (
                "The breathing exercises",
                "Daily check ins",
                "The mood tracker",
                "The guided meditations",
                "The journaling prompts",
                "The sleep routine",
                "The grounding exercises",
            ),
            ("helped with", "eased", "calmed", "improved"),
            (
                "my anxiety",
                "my panic attacks",
                "my racing thoughts",
                "my low moods",
                "my insomnia",
                "my constant worry",
                "my stress spirals",
            ),
            ".",
            (
                "Grateful for this kind little companion.",
                "Gentle, kind and truly helpful.",
                "Real, warm support when I needed it.",
                "Caring, supportive and encouraging.",
                "Comforting support on rough days. Love it.",
                "A calming daily habit. Happy.",
                "Warm, helpful care. Recommend it.",
            ),
        ),
    ],
    ("sup", -1): [
        (
            "Weeks of",
            (
                "the same recycled breathing tip",
                "identical check in questions",
                "the same three exercises",
                "interchangeable affirmation cards",
                "one looping meditation",
                "copy paste journal prompts",
            ),
            "and",
            (
                "my anxiety is unchanged",
                "my stress level is the same",
                "my mood chart is flat",
                "sleep is as bad as ever",
                "the worry is still there",
            ),
            ".",
            (
                "Shallow, generic and unhelpful.",
                "Useless for anything serious.",
                "Empty, disappointing fluff.",
                "Tone deaf and frustrating.",
                "Zero real support here. Disappointed.",
                "No actual care behind the scripted warmth. Hollow.",
            ),
        ),
    ],
    ("cri", -1): [
        (
            "Typed",
            (
                "that I felt unsafe",
                "something about dark thoughts",
                "a clearly urgent message",
                "that I could not cope anymore",
                "words any human would flag",
            ),
            "and got",
            (
                "a generic breathing tip",
                "a cheerful sticker",
                "an article about sleep hygiene",
                "the usual daily quote",
                "a smiley face prompt",
                "a gratitude exercise",
            ),
            ".",
            (
                "Dangerous handling of a crisis.",
                "No hotline, no escalation. Unsafe and careless.",
                "A failure that could cost a life.",
                "Reckless failure in an emergency moment.",
                "Alarming, dangerous gap.",
                "Crisis support this bad is unsafe.",
            ),
        ),
        (
            "The",
            ("crisis line", "emergency card", "safety plan", "urgent support tab"),
            (
                "is impossible to find in a dark moment",
                "shows numbers for the wrong country",
                "demands a sign up before helping",
                "only works in english",
                "vanished without warning",
                "points nowhere when it matters most",
            ),
            ".",
            (
                "Unsafe when seconds count.",
                "Dangerous, careless engineering.",
                "An emergency flow nobody tested. Alarming.",
                "Risky and cruel for vulnerable moments.",
                "Unsafe, unacceptable gap.",
            ),
        ),
    ],
    ("cri", 1): [
        (
            "When I",
            (
                "wrote that I felt unsafe",
                "logged a very dark entry",
                "hit the panic button",
                "reached out in an urgent moment",
                "typed a scary message",
            ),
            "it",
            (
                "surfaced the local crisis line instantly",
                "offered the 988 line with a calm script",
                "showed emergency contacts one tap away",
                "walked me through a grounding plan",
                "pointed me to the helpline right away",
                "asked gently if I was safe",
            ),
            ".",
            (
                "Fast, caring and safe.",
                "Reassuring safety net. Grateful.",
                "Responsible, trustworthy handling.",
                "Potentially lifesaving. Thank you.",
                "The safety team earned my trust.",
                "Careful, humane crisis support. Impressed.",
            ),
        ),
    ],
    ("cost", -1): [
        (
            (
                "Fifty dollars a month after the trial",
                "The price doubled overnight",
                "Every useful feature sits behind the paywall",
                "Got charged double for one subscription",
                "The cancel button hides on purpose",
                "The subscription renewed itself silently",
            ),
            ".",
            (
                "Billing refused the refund",
                "The free tier is an empty shell",
                "Billing ignored four emails",
                "My bank had to step in",
                "The refund never showed up",
                "No reply from billing for weeks",
            ),
            ".",
            (
                "Greedy, predatory prices.",
                "Overpriced and dishonest.",
                "A scam wearing a wellness mask.",
                "Money grab, plain and simple. Disappointed.",
                "Shameless, expensive nonsense.",
                "Pure greed. Avoid.",
                "Cheap tricks, expensive bill.",
            ),
        ),
        (
            "They",
            (
                "charge for the exercises shown in the ads",
                "moved journaling into the premium tier",
                "doubled the fee for loyal users",
                "paywalled the mood history",
                "made the trial cancel flow a maze",
            ),
            ".",
            (
                "Asking struggling people for this much money is wrong",
                "The billing page is a hall of mirrors",
                "My wallet noticed before I did",
                "A subscription trap dressed as self care",
                "Billing shrugged at the refund question",
            ),
            ".",
            (
                "Predatory and greedy.",
                "Unfair, overpriced scheme.",
                "Dishonest money grab.",
                "Expensive and exploitative.",
                "Disappointing cash grab.",
                "Scam prices, awful value.",
            ),
        ),
    ],
    ("cost", 1): [
        (
            (
                "The free tier covers everything essential",
                "Student discount halved the price in seconds",
                "They refunded my accidental renewal the same day",
                "Pay what you can prices made this possible for me",
                "One family plan covers all four of us",
                "The yearly price is less than one therapy session",
            ),
            ".",
            (
                "Fair, affordable and honest.",
                "Generous terms done right. Grateful.",
                "Transparent billing, zero tricks. Happy to pay.",
                "Accessible support at last. Wonderful.",
                "Affordable, honest and worth it.",
                "Kind prices for hard times. Thank you.",
            ),
        ),
    ],
    ("bot", -1): [
        (
            "The chatbot",
            (
                "repeats the same three replies",
                "forgets everything between sessions",
                "misunderstands anything specific",
                "answers with obvious templates",
                "recycles the same advice endlessly",
                "dodges every direct question",
            ),
            ".",
            (
                "Asked about my week and got a sleep tip",
                "It keeps using my name wrong",
                "Yesterday's conversation may as well have never happened",
                "Every reply could be addressed to anyone",
                "It answered my grief with a trivia fact",
                "Three different questions, one identical answer",
            ),
            ".",
            (
                "Robotic, canned and cold.",
                "Generic, repetitive and frustrating.",
                "Fake conversation, no real listening.",
                "Shallow scripts all the way down.",
                "A hollow, boring chat experience.",
                "Scripted, soulless replies.",
                "Artificial in the worst way.",
            ),
        ),
        (
            (
                "Talking to this bot",
                "Chatting with this bot",
                "Texting this bot",
                "Talking with the bot",
                "A session with this bot",
            ),
            (
                "feels like reading a flowchart",
                "is a loop of canned sympathy",
                "never goes anywhere new",
                "resets to small talk constantly",
                "turns every topic into a quiz",
            ),
            ".",
            (
                "The conversation has no memory at all",
                "The replies match keywords, never meaning",
                "Nothing I say changes the script",
                "The same prompts circle back daily",
                "Its questions ignore my answers",
            ),
            ".",
            (
                "Cold, fake and repetitive.",
                "A generic machine, zero warmth.",
                "Boring scripted chat.",
                "Dull, robotic and disappointing.",
                "Shallow as a puddle. Frustrating.",
            ),
        ),
    ],
    ("bot", 1): [
        (
            "It",
            (
                "remembered what I shared last week",
                "asks follow up questions that actually land",
                "adapts its tone to my mood",
                "paraphrases me before it responds",
                "builds on earlier conversations",
                "notices when my messages get short",
            ),
            ".",
            (
                "It referenced my exam stress right before the retake",
                "It checked on my sister's surgery days later",
                "On hard days it keeps replies short and gentle",
                "It caught my sarcasm and gently named it",
                "It asked about the interview I mentioned once",
                "It remembered my dog's name after one mention",
            ),
            ".",
            (
                "Smart, warm and surprisingly human.",
                "Feels like a thoughtful friend. Impressed.",
                "Clever, attentive conversation. Love it.",
                "The best chat experience in any wellness app.",
                "Warm, curious and quick. Delightful.",
                "Listens better than most people. Wonderful.",
            ),
        ),
    ],
    ("perf", -1): [
        (
            "The app",
            ("crashes", "freezes", "hangs on the loading screen", "logs me out", "shows a blank screen", "loses my draft"),
            (
                "on every launch",
                "mid exercise",
                "whenever I rotate the phone",
                "after each update",
                "on slow connections",
                "at random",
            ),
            ".",
            (
                "Buggy, laggy and unreliable.",
                "Broken at the most basic level.",
                "Slow, glitchy and frustrating.",
                "Unusable, broken mess.",
                "Crashes like clockwork. Pathetic.",
                "Bugs in every corner. Useless.",
                "Unstable, annoying junk.",
            ),
        ),
        (
            (
                "Buttons need two or three taps to respond",
                "The keyboard lags a full second behind",
                "Sync quietly drops entries",
                "Login loops back to the password screen",
                "Scrolling stutters on every page",
                "Notifications fire hours late",
            ),
            ".",
            (
                "Reinstalled twice and nothing changed",
                "The cache wipe ritual does nothing",
                "They closed my bug report unread",
                "Two updates later it is the same",
                "My phone is new, the excuses are old",
            ),
            ".",
            (
                "Glitchy, unreliable build.",
                "Sloppy, broken engineering.",
                "Slow and buggy everywhere.",
                "A bug with a user interface.",
                "Unpolished, frustrating mess.",
            ),
        ),
    ],
    ("perf", 1): [
        (
            (
                "Opens instantly even on my ancient phone",
                "The update made every screen feel quick",
                "Offline mode finally just works",
                "Search across two years of entries is instant",
                "Cold start takes under a second",
                "The sync finishes before the screen settles",
            ),
            ".",
            (
                "Not one crash in months",
                "Animations are smooth and quiet",
                "Sync completes before I even look",
                "Buttons respond on the first tap",
                "No bugs since install",
            ),
            ".",
            (
                "Fast, stable and reliable.",
                "Smooth, polished engineering. Impressed.",
                "Rock solid build quality. Happy user.",
                "Quick, dependable and clean.",
                "Snappy, reliable and smooth.",
                "Solid code, no glitches.",
            ),
        ),
    ],
}

# ---------------------------------------------------------------------------
# planted rejects
# ---------------------------------------------------------------------------

PLANT_SHORT = [
    "Great",
    "love it",
    "meh",
    "ok i guess",
    "Trash app honestly",
    "\U0001f44d\U0001f44d\U0001f44d",
    "best app ever",
    "nope.",
    "Pretty good so far",
    "не работает",
    "Five stars",
    "waste of money",
]

PLANT_NON_ENGLISH = [
    "Esta aplicación realmente ayuda mucho con mi ansiedad diaria",
    "La aplicación se cierra cada vez que abro el diario",
    "Der Chatbot wiederholt ständig dieselben Antworten leider sehr enttäuschend",
    "Das Abo ist viel zu teuer für diese wenigen Funktionen",
    "O aplicativo trava sempre quando tento escrever meu diário",
    "Muito caro pelo pouco que oferece cancelei minha assinatura",
    "Cette application plante souvent et perd mes notes récentes",
    "Très utile pour gérer mon stress quotidien je recommande vivement",
    "Questa applicazione costa troppo per quello che offre davvero",
    "La sincronizzazione cancella sempre le mie annotazioni più vecchie",
]

PLANT_UNREADABLE = [
    "The electroencephalographically institutionalized incomprehensibilities of uncharacteristically interdisciplinary psychopharmacological contraindications notwithstanding overcomplicated organizational implementations",
    "The incontrovertibly multidimensional neuropsychological individualization incompatibilities surrounding extraordinarily counterproductive institutionalization methodologies",
    "The disproportionately unconstitutional compartmentalization responsibilities necessitating incomprehensibly overintellectualized deinstitutionalization countermeasures",
    "The characteristically interdenominational misappropriations of hypersensitization prioritizations immediately destabilize electrophysiological interoperabilities",
]

# kept reviews whose text gets re-posted with cosmetic edits
DUP_SOURCE_IDS = [
    "h-priv-001",
    "h-sup-003",
    "h-cri-002",
    "h-cost-004",
    "h-bot-001",
    "h-perf-002",
    "s-priv-001",
    "s-perf-003",
]


def _fill(rng: random.Random, template: tuple[Slot, ...]) -> str:
    parts = [p if isinstance(p, str) else rng.choice(p) for p in template]
    text = " ".join(parts)
    return text.replace(" .", ".").replace(" ?", "?").replace(" ,", ",")


def _jitter(text: str, style: int) -> str:
    if style == 0:
        return text.upper()
    if style == 1:
        return text.replace(" ", "  ")
    if style == 2:
        return text + "  "
    return text.lower()


def _date(rng: random.Random) -> str:
    day = datetime.date(2023, 1, 1) + datetime.timedelta(days=rng.randrange(912))
    return day.isoformat()


def _rating(rng: random.Random, label: int) -> int | None:
    if rng.random() < 0.08:
        return None
    if label > 0:
        return rng.choice((4, 5, 5))
    return rng.choice((1, 1, 2))


def _meta(rng: random.Random, label: int) -> dict:
    return {
        "app_id": rng.choice(APPS),
        "store": rng.choice(records.STORES),
        "rating": _rating(rng, label),
        "posted_at": _date(rng),
    }


def build() -> tuple[list[dict], list[dict], dict]:
    rng = random.Random(SEED)
    rows: list[dict] = []
    labels: list[dict] = []

    counters: dict[str, int] = {}

    def next_id(prefix: str, theme: str) -> str:
        key = prefix + theme
        counters[key] = counters.get(key, 0) + 1
        return f"{prefix}-{theme}-{counters[key]:03d}"

    for theme, label, text in HAND:
        row = {"id": next_id("h", theme), "text": text, **_meta(rng, label)}
        rows.append(row)
        labels.append({"review_id": row["id"], "aspect_id": ASPECT[theme], "label": label})

    seen_texts = {r["text"] for r in rows}
    for theme in ("priv", "sup", "cri", "cost", "bot", "perf"):
        for polarity_name, label in (("pos", 1), ("neg", -1)):
            want = SYNTH_PLAN[theme][polarity_name]
            templates = TEMPLATES[(theme, label)]
            made = 0
            while made < want:
                template = templates[made % len(templates)]
                for _ in range(1000):
                    text = _fill(rng, template)
                    if text not in seen_texts:
                        break
                else:
                    raise RuntimeError(f"template pool exhausted for {theme}/{polarity_name}")
                seen_texts.add(text)
                row = {"id": next_id("s", theme), "text": text, **_meta(rng, label)}
                rows.append(row)
                # the first generated review per theme and polarity is labeled
                if made == 0:
                    labels.append(
                        {"review_id": row["id"], "aspect_id": ASPECT[theme], "label": label}
                    )
                made += 1

    rng.shuffle(rows)

    by_id = {r["id"]: r for r in rows}
    plants: list[dict] = []
    for i, text in enumerate(PLANT_SHORT):
        plants.append({"id": f"p-short-{i + 1:02d}", "text": text, **_meta(rng, -1)})
    for i, text in enumerate(PLANT_NON_ENGLISH):
        plants.append({"id": f"p-noneng-{i + 1:02d}", "text": text, **_meta(rng, 1)})
    for i, text in enumerate(PLANT_UNREADABLE):
        plants.append({"id": f"p-read-{i + 1:02d}", "text": text, **_meta(rng, -1)})
    for i, src_id in enumerate(DUP_SOURCE_IDS):
        src = by_id[src_id]
        plant = {"id": f"p-dup-{i + 1:02d}", "text": _jitter(src["text"], i % 4), **_meta(rng, -1)}
        plant["app_id"] = src["app_id"]  # dedupe keys on app and text together
        plants.append(plant)

    rows.extend(plants)

    manifest = {
        "input": len(rows),
        "kept": len(rows) - len(plants),
        "rejected": {
            "too_short": len(PLANT_SHORT),
            "non_english": len(PLANT_NON_ENGLISH),
            "low_readability": len(PLANT_UNREADABLE),
            "duplicate": len(DUP_SOURCE_IDS),
        },
    }
    return rows, labels, manifest


def verify(rows: list[dict], labels: list[dict], manifest: dict) -> None:
    """Re-derive every promised property from the assembled rows."""
    function_words = data.wordlist("english_function_words.txt")
    recs = [records.make_record(r, fetched_at=FETCHED_AT) for r in rows]
    by_id = {r.id: r for r in recs}
    assert len(by_id) == len(recs), "review ids must be unique"

    plan_total = sum(sum(v.values()) for v in SYNTH_PLAN.values())
    assert plan_total + len(HAND) == manifest["kept"]

    for rec in recs:
        kind = rec.id.split("-")[1] if rec.id.startswith("p-") else "main"
        n_words = len(rec.text.split())
        if kind == "main":
            assert n_words >= 5, f"{rec.id} too short to keep"
            assert records.is_english(rec.text), f"{rec.id} fails the language gate"
            assert textprep.readability(rec.text) >= -30.0, f"{rec.id} unreadable"
        elif kind == "short":
            assert n_words < 5, f"{rec.id} not short enough"
        elif kind == "noneng":
            assert n_words >= 5
            assert not records.is_english(rec.text), f"{rec.id} passes the language gate"
            for token in rec.text.lower().split():
                stripped = "".join(ch for ch in token if ch.isalpha())
                assert stripped not in function_words, f"{rec.id} contains {stripped!r}"
        elif kind == "read":
            assert n_words >= 5
            assert records.is_english(rec.text)
            assert textprep.readability(rec.text) < -30.0, f"{rec.id} too readable"
        elif kind == "dup":
            src = by_id[DUP_SOURCE_IDS[int(rec.id.split("-")[2]) - 1]]
            assert records.dedupe_key(rec) == records.dedupe_key(src), f"{rec.id} key drifted"

    # no accidental duplicates among the records meant to survive
    main_keys = [records.dedupe_key(r) for r in recs if not r.id.startswith("p-")]
    assert len(set(main_keys)) == len(main_keys), "unplanned duplicate in the main body"

    result = records.filter_reviews(recs)
    got = {"input": len(recs), "kept": len(result.kept), "rejected": result.rejected}
    assert got == manifest, f"filter disagrees with manifest: {got} vs {manifest}"

    kept_ids = {r.id for r in result.kept}
    assert len(labels) == 200
    assert len({(l["review_id"], l["aspect_id"]) for l in labels}) == len(labels)
    for row in labels:
        assert row["review_id"] in kept_ids, f"label points at rejected {row['review_id']}"
        assert row["label"] in (1, -1)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="fixtures", help="directory to write into")
    args = parser.parse_args()

    rows, labels, manifest = build()
    verify(rows, labels, manifest)

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "reviews.jsonl", "w", encoding="utf-8") as fh:
        for row in rows:
            rec = records.make_record(row, fetched_at=FETCHED_AT)
            fh.write(json.dumps(rec.to_dict(), ensure_ascii=False, sort_keys=True) + "\n")
    with open(out / "sentiment_labels.jsonl", "w", encoding="utf-8") as fh:
        for row in labels:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
    with open(out / "expected_filter_counts.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")

    print(f"wrote {len(rows)} reviews, {len(labels)} labels to {out}/")
    print(f"manifest: {manifest}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
