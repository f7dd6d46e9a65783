#!/usr/bin/env python3
"""Builds data/lexicons/tags.tsv from the word lists below.

Regular -ed/-ing verb forms are left out on purpose: the tagger assigns
them with its suffix and context rules. Irregular participles are listed.
When a word carries several tags, the first line is the default reading.

    python3 tools/data/gen_tag_lexicon.py > data/lexicons/tags.tsv
"""

import sys

DET = """a an the this that these those each every all any some no another either
neither both such what which whose whichever whatever"""

PRON = """i me my mine myself we us our ours ourselves you your yours yourself
yourselves he him his himself she her hers herself it its itself they them
their theirs themselves who whom one ones someone somebody something anyone
anybody anything everyone everybody everything nobody nothing none there"""

MODAL = "shall must should will may can could would might ought"

ADP = """of in on at by for with from to into onto upon about above below over
under between among through throughout during before after against within
without along across behind beyond per via toward towards around near since
until till despite except including excluding following
than like unlike inside outside off up down out as amid versus"""

CONJ = """and or but nor yet so if unless whether because although though while
whereas whenever wherever when where once then else otherwise thus hence
therefore however"""

NUM = """zero one two three four five six seven eight nine ten eleven twelve
thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty
forty fifty sixty seventy eighty ninety hundred thousand million billion first
second third fourth fifth sixth seventh eighth ninth tenth dozen half"""

ADV = """not never always often sometimes usually normally generally typically
frequently rarely seldom occasionally also too very quite rather really just
only even still already soon now later again here there everywhere somewhere
anywhere nowhere immediately automatically manually periodically
continuously regularly quickly slowly easily efficiently effectively
accurately correctly properly successfully securely safely directly
indirectly approximately exactly precisely nearly almost entirely fully
completely partially mostly mainly largely highly relatively reasonably
sufficiently adequately appropriately accordingly respectively separately
together simultaneously concurrently sequentially previously currently
recently finally initially eventually subsequently afterwards meanwhile
instantly promptly constantly consistently reliably remotely locally globally
online offline upward downward forward backward further furthermore moreover
likewise instead perhaps possibly probably certainly clearly obviously
explicitly implicitly specifically particularly especially primarily
essentially basically ideally preferably optionally mandatory else ever
anyway nevertheless nonetheless hereby therein thereafter whereby how why
well much more most less least enough away back apart ahead
daily weekly monthly yearly hourly annually"""

ADJ = """able acceptable accessible accurate active actual additional adequate
administrative advanced affected aggregate alternative ambiguous analog annual
anonymous appropriate approximate arbitrary audible authorized automatic
automated available average bad basic binary blank brief broad busy central
certain chemical civil clear close common compatible complete complex
comprehensive concurrent conditional confidential consistent constant correct
corresponding critical crucial current custom daily dangerous dedicated
default defective dense dependent detailed different difficult digital direct
distinct distributed dynamic early easy economic effective efficient
electronic eligible empty encrypted entire environmental equal equivalent
essential exact excessive existing expected expensive explicit external extra
faint false familiar fast fatal final financial fine first fixed flexible
foreign formal former frequent full functional fundamental future general
geographic global good graphical great green grey gray hard hazardous heavy
high historical horizontal human ideal identical illegal immediate implicit
important inactive incorrect independent individual industrial initial inner
intelligent interactive intermediate internal invalid irrelevant key large
last late legal legible light likely limited linear live local logical long
low main major manual mandatory many marginal maximum mechanical medical
medium minimal minimum minor missing mobile moderate modern multiple mutual
narrow national native natural necessary negative new next noisy nominal
normal numerous obsolete official old open operational optimal optional
ordinary original other outer overall own parallel partial particular past
pending permanent persistent personal physical portable positive possible
potential practical precise preliminary present previous primary prior
private probable proper public quick random rapid raw readable real
real-time realistic reasonable recent rectangular redundant regional regular
relative relevant reliable remote repeated representative required
responsible responsive robust rough safe same scalable scientific secondary
secure selected sensitive separate sequential serious several severe shared
short significant similar simple single slow small smart social soft solid
special specific stable standard static statistical strict strong subsequent
successful sudden sufficient suitable superior suspicious symbolic
synchronous technical temporary terrible textual thin tight timely total
tough traditional transparent true typical unable unauthorized unavailable
unclear uncertain unique universal unknown unusual upper urgent usable useful
user-friendly valid valuable various vertical virtual visible visual vital
weak whole wide wireless wrong young two-dimensional three-dimensional
ambient annual accountable alphanumeric numeric numerical academic
tactical naval military operational aerial airborne ground hostile friendly
unmanned manned strategic"""

NOUN = """access account accuracy acknowledgement acknowledgment action activity
actor address administration administrator agent agreement aircraft alarm
alert algorithm allocation amount analysis announcement answer application
approach approval architecture archive area argument array arrival
assessment asset assignment assistant assumption attachment attack attempt
attendance attention attribute audit authentication author authority
authorization availability backup balance band bandwidth base baseline basis
battery behavior behaviour benefit block board body boundary box branch
breach browser budget buffer bug building bulletin button cable cache
calculation calendar call camera campus capability capacity card case
catalog catalogue category cause cell center centre certificate chain change
channel chapter character charge chart check checkpoint choice circuit city
class classification client clock code collection color colour column
command comment commitment communication community company comparison
compatibility completion complexity compliance component computation
computer concept condition confidence configuration confirmation conflict
connection consequence console constraint consumption contact container
content context contract control controller convention conversion
coordinate coordinator copy core cost count country course coverage
creation criterion culture currency customer cycle damage dashboard data
database date day deadline deal decision default definition degree delay
delivery demand department deployment description design destination detail
detection developer development device diagnosis diagram dialog dialogue
difference dimension direction directory disk display distance distribution
document documentation domain dot download draft driver duration duty edge
edition editor effect efficiency effort element email e-mail emergency
employee end endpoint energy engine engineer enrollment enrolment entity
entry environment equipment error estimate evaluation event evidence
exam examination example exception execution exercise exit expansion
expectation experience expert explanation export expression extension
extent facility factor failure fault feature fee feedback field figure file
filter flag flight floor flow folder font force forecast form format
formula frame framework frequency function functionality gateway goal grade
graph grid group growth guest guidance guide guideline hand handler hardware
header health height help history hold home host hour house icon
identification identifier identity image impact implementation import
improvement incident index indicator information infrastructure input
inquiry installation instance instruction instructor integration integrity
intensity interaction interface internet interval interest inventory
invoice issue item job key keyboard kind knowledge label language laptop
latency launch layer layout lead leader lecture lecturer length lesson
letter level library licence license life limit line link list load
location lock log login logout loss machine maintenance malfunction
management manager manual map margin mark market master match material
matrix maximum measure measurement mechanism media medium member memory
menu message metadata method metric middle minimum minute mission mode
model module moment monitor month mouse movement name navigation need
network node note notice notification number object objective obligation
observation occurrence office officer operation operator option order
organization organisation origin outcome outline output overview owner
package page panel parameter parent part participant partner party password
path pattern payment peak percentage performance period permission person
personnel phase phone picture piece pixel place plan platform player
point policy pool port portal portion position post power practice
precision preference preparation presence presentation pressure price
principle printer priority privacy problem procedure process processing
processor product profile program programme progress project property
proposal protection protocol provider provision purpose quality quantity
query question queue radar radio range rate ratio reaction reader reading
reason receipt record recording recovery reduction reference region
registration regulation relation relationship release reliability report
representation request requirement research reservation resolution resource
response responsibility restriction result retrieval return review right
risk role room root rotation route routine row rule safety sample satellite
scale scenario schedule schema scheme scope score screen script search
season second section sector security segment selection semester sensor
sequence series server service session set setting severity share ship
shortcut signal signature site situation size skill slot software solution
source space specification speed staff stage standard start state
statement station statistic status step storage store strategy stream
street strength string structure student study style subject submission
subscription substance success suggestion summary supervisor supply support
surface surveillance symbol synchronization system table tag target task
teacher team technique technology temperature template term terminal test
text theme threat threshold ticket time timeout timer timestamp title
token tolerance tool topic total track traffic training transaction
transfer transition transmission transport trend trigger type unit
university update upload usage use user utility validation value variable
variation vehicle vendor version video view violation visibility
visualization voice volume warning way weather web website week weight
width window word work workflow workload workstation world year zone
wind humidity light sound smoke fire gas water air soil noise vibration
motion rainfall forest home city building bridge road tunnel river
endangerment deviation anomaly tolerance calibration
roster enrolment enrollment assignment coursework syllabus transcript
exam quiz grade feedback lecture tutorial timetable faculty campus
vehicle aircraft drone payload sortie waypoint telemetry imagery sensor
operator mission target launch recovery airframe antenna datalink uplink
downlink ground-station controller""" + " " + """ability absence addition
advantage age aim alternative amount appearance aspect average background
bit care challenge chance character circumstance claim combination concern
consideration contribution date decade degree demand detail difference
discussion effect element emphasis equipment existence experience fact
failure fashion focus freedom future gap gain half idea importance increase
instance intention interest item kind lack level limitation majority matter
mean meaning means measure method minority mistake nature necessity notion
number occasion opportunity part percent period place point portion
possibility potential practice presence pressure principle priority problem
progress proportion purpose quality range rate reality reason record
reference relation relevance requirement respect rest result role rule
scope sense shape side sign significance situation size sort source space
stage step stuff style success sum support task term thing time trace
type variety version view volume way whole""" + " C&C"

VERB = """accept access accommodate achieve acknowledge acquire act activate adapt
add adjust administer adopt affect aggregate alert allocate allow alter
analyse analyze announce answer anticipate appear append apply approve
archive arrange assemble assess assign assist associate assume attach
attempt attend audit authenticate authorize authorise avoid back backup
balance base become begin believe belong block book browse buffer build
calculate calibrate call cancel capture carry cause change charge check
choose clarify classify clean clear click close collect combine comment
commit communicate compare compile complete comply compose compress compute
concern conclude configure confirm connect consider consist constrain
contain continue contribute control convert coordinate copy correct
correlate count cover create customize customise deactivate deal debug
decide decline decode decrease decrypt define delay delete deliver demand
demonstrate deny depend deploy derive describe design detect determine
develop diagnose differ disable disconnect discover display distribute
divide document download drag draw drop edit eliminate email e-mail
emphasize employ enable encode encourage encrypt end enforce engage enhance
enroll enrol ensure enter establish estimate evaluate examine exceed
exchange exclude execute exist expand expect expire explain export express
extend extract fail feed fetch fill filter find finish fit fix flag flow
focus follow force forecast format forward function gather generate get
give go grade grant group guarantee guide handle happen have hear help hide
highlight hold identify ignore illustrate implement import improve include
incorporate increase indicate inform initialize initialise initiate input
insert inspect install instruct integrate intend interact interface
interpret interrupt introduce investigate invoke involve issue join keep
know label launch lead learn leave let limit link list listen load locate
lock log look maintain make manage map mark match mean measure meet merge
migrate minimize minimise miss mitigate modify monitor move navigate need
notify obtain occur offer open operate optimize optimise order organize
organise output overwrite own pass pause perform permit persist pick place
plan play plot point post predict prefer prepare present preserve prevent
print prioritize proceed process produce program prohibit prompt propose
protect prove provide publish pull purge push put qualify query queue raise
reach read receive recognize recognise recommend reconcile record recover
redirect reduce refer refresh register reject relate release rely remain
remember remind remove rename render repeat replace replicate reply report
represent request require reserve reset resolve respond restart restore
restrict resume retain retrieve return reuse review revise route run save
scan schedule search secure see seek select send separate serve set share
show shut sign simulate sort specify split start state stop store stream
submit subscribe succeed suggest summarize supply support suspend switch
synchronize synchronise take target tell terminate test track trade
train transfer transform translate transmit trigger try turn type undo
unlock update upgrade upload use validate verify view violate visualize
wait want warn work write yield zoom"""

# verbs whose first reading is the verb, when they are also nouns
VERB_FIRST = """access allow back check control display filter help list load log
map monitor process record report request review search select set store
support test track transfer update upload use view"""

BE_HAVE_DO = [
    ("be", "VERB"), ("is", "VERB"), ("are", "VERB"), ("was", "VERB"),
    ("were", "VERB"), ("been", "VERB"), ("being", "VERB"), ("am", "VERB"),
    ("has", "VERB"), ("had", "VERB"), ("having", "VERB"),
    ("do", "VERB"), ("does", "VERB"), ("did", "VERB"), ("done", "VERB"),
    ("doing", "VERB"),
]

# irregular past forms and participles
IRREGULAR_PAST = """began begun became brought built bought caught chose chosen
came dealt drew drawn drove driven ate eaten fell fallen fed felt fought
found forgot forgotten froze frozen gave given went gone got gotten grew
grown held heard hid hidden kept knew known laid led left lent let lost made
meant met paid put quit ran read rode rose risen said sat saw seen sought
sold sent set shown showed shut sang slept spent split spoke spoken stood
stole stolen struck swept took taken taught told thought threw thrown
understood undone upheld woke woken wore worn won withdrew withdrawn wrote
written overwritten rewritten"""

# -ing nouns that would otherwise be read as verbs
ING_NOUNS = """reading readings setting settings warning warnings building buildings
meeting meetings recording recordings rating ratings processing logging
training heading headings mapping mappings opening ending booking bookings
morning evening spelling"""

# adjectives ending in -ed/-ing that behave as plain adjectives
PARTICIPIAL_ADJ = """advanced automated detailed distributed encrypted expected
limited required selected shared missing existing pending outgoing incoming
ongoing upcoming remaining following corresponding interesting"""


def words(block):
    return block.split()


def plural(noun):
    if noun in ("data", "media", "information", "software", "hardware",
                "equipment", "knowledge", "feedback", "metadata", "personnel",
                "staff", "evidence", "research", "guidance", "safety",
                "privacy", "traffic", "weather", "health", "humidity",
                "rainfall", "imagery", "telemetry", "infrastructure",
                "functionality", "documentation", "maintenance",
                "coursework", "series", "means", "c&c", "stuff", "air",
                "water", "soil", "smoke", "fire"):
        return None
    if noun.endswith("is"):
        return noun[:-2] + "es"
    if noun.endswith("y") and noun[-2:-1] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun == "criterion":
        return "criteria"
    if noun == "person":
        return "people"
    if noun == "child":
        return "children"
    return noun + "s"


def third_singular(verb):
    if verb.endswith("y") and verb[-2:-1] not in "aeiou":
        return verb[:-1] + "ies"
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    return verb + "s"


def main(out):
    entries = {}

    def add(word, tag):
        tags = entries.setdefault(word.lower(), [])
        if tag not in tags:
            tags.append(tag)

    for w in words(MODAL):
        add(w, "MODAL")
    for w in words(DET):
        add(w, "DET")
    for w in words(PRON):
        add(w, "PRON")
    for w in words(ADP):
        add(w, "ADP")
    for w in words(CONJ):
        add(w, "CONJ")
    for w in words(NUM):
        add(w, "NUM")
    for w, t in BE_HAVE_DO:
        add(w, t)
    add("have", "VERB")

    verb_first = set(words(VERB_FIRST))
    verbs = set(words(VERB))
    nouns = set(words(NOUN))

    for w in words(ING_NOUNS):
        add(w, "NOUN")

    for v in sorted(verbs):
        if v in verb_first:
            add(v, "VERB")
            add(third_singular(v), "VERB")
    for n in sorted(nouns):
        add(n, "NOUN")
        p = plural(n)
        if p:
            add(p, "NOUN")
    for v in sorted(verbs):
        add(v, "VERB")
        add(third_singular(v), "VERB")
    for w in words(IRREGULAR_PAST):
        add(w, "VERB")
    for w in words(PARTICIPIAL_ADJ):
        add(w, "ADJ")
    for w in words(ADJ):
        add(w, "ADJ")
    for w in words(ADV):
        add(w, "ADV")

    out.write("# word<TAB>tag; repeated words list alternative tags, first is default\n")
    out.write("# generated by tools/data/gen_tag_lexicon.py\n")
    out.write("# words: %d\n" % len(entries))
    for word in sorted(entries):
        for tag in entries[word]:
            out.write("%s\t%s\n" % (word, tag))


if __name__ == "__main__":
    main(sys.stdout)
