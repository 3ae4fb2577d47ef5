#!/usr/bin/env python3
"""Regenerate the bundled Hindi and English word lists under data/.

Both lists are produced deterministically from base vocabularies plus
regular morphology (verb conjugations, plurals, degree forms), then
filtered to lowercase ASCII letters and sorted.  The Hindi side uses
common romanized (Latin-script) transliterations; the English side uses
frequent everyday vocabulary.  A handful of surfaces appear in both
languages (e.g. "man", "din"); the ingest step excludes such cross-class
words and records them in the provenance report, so the lists are kept
honest here rather than pre-filtered.

Run from anywhere: paths resolve against the repository root.
"""

import re
from pathlib import Path

WORD_RE = re.compile(r"^[a-z]{2,}$")
VOWELS = set("aeiou")

# --- Hindi (romanized) base vocabulary -----------------------------------

HINDI_NOUNS = """
ghar din raat desh gaon shahar makaan dukaan bazaar mandir masjid girja
darwaza khidki kamra aangan chhat deewar farsh seedhi chabi tala
aadmi aurat bachcha ladka ladki beta beti bhai behen dost dushman
pita mata chacha chachi mama mami dada dadi nana nani pati patni
raja rani mantri sipahi kisaan mazdoor vyapari daaktar adhyapak chhatra
naukar malik mehmaan padosi rishtedar parivaar samaaj log janta
sir aankh kaan naak muh hoth daant jeebh gala kandha haath ungli
pet peeth tang ghutna pair khoon dil dimaag chehra baal
pani paani doodh dahi ghee makkhan tel atta chawal gehu daal sabzi
roti chapati puri halwa kheer mithai namak cheeni masala mirch haldi
adrak lahsun pyaz aloo tamatar gobhi palak bhindi baingan matar
phal aam kela seb angoor anar santara nimbu imli amrood papita kharbuja
janwar ghoda gadha bail gaay bhains bakri bhed kutta billi sher
bandar haathi oont hiran bhalu lomdi khargosh chooha saanp machli
chidiya kauwa tota mor kabutar murgi batakh baaz ullu
ped paudha patta phool kanta jad tana beej ghaas jangal bagicha
suraj chand tara aasman badal barish bijli toofan dhoop chhaya
hawa aag dhuan mitti patthar ret pahad nadi samundar talaab kuan
zameen khet fasal anaj bhoosa khaad hal bael
kapda kurta pajama saree dhoti topi juta chappal chashma ghadi
gehna haar kangan bali anguthi sona chandi heera moti loha tamba
kitab kalam kagaz syahi mez kursi almari sanduk bistar takiya chadar
diya batti mombatti aaina kangha sabun tauliya balti lota thali
katori chammach chaku kainchi sui dhaga rassi danda lathi
gaadi pahiya sadak pul nao jahaz rail hawai
paisa rupaya dhan daulat kharcha bachat karz byaj
kaam dhandha naukri majdoori mehnat aaram chhutti
samay waqt pal ghanta hafta mahina saal subah dopahar shaam
khushi gham dukh sukh dard pyaar mohabbat nafrat gussa dar sharam
asha nirasha vishwas shak himmat dar bhay lalach daya kripa
zindagi maut janam umar swasthya bimari dawa ilaj
bhasha shabd awaaz baat kahani kavita geet gaana sangeet natak
naam pata khabar samachar chitthi sandesh sawal jawab salah
shiksha vidya gyan akal buddhi yaad sapna soch vichar raay
sach jhooth nyay anyay kanoon niyam reet riwaj dharm paap punya
yuddh shanti jeet haar ladai jhagda samjhauta dosti dushmani
khel inaam saza mela tyohar shaadi byah janamdin
rang roop akar lambai chaudai unchai gehrai wazan
jagah raasta mod kona bheed mahal kila gufa
somvar mangalvar budhvar guruvar shukravar shanivar ravivar
sawan bhadon basant patjhad garmi sardi barsaat
chhatri gubbara patang jhoola seeti dholak bansuri sitar tabla
thela rickshaw tanga chhakda
chithi lifafa tikat mohar
chulha tawa kadhai belan chakla chimta phukni
jhadu pocha tokri chhalni soop
angithi takhti patti khadiya
dulha dulhan baraat mehndi haldi bindiya sindoor choodi payal jhumka
mala tika kalash diya rangoli
pandit pujari bhakt chela guru sant sadhu fakir
bhagwan ishwar devta devi swarg narak atma punar
mandal akhada dangal kushti pahalwan
thag chor daku lutera jebkatra
raja maharaja samrat senapati yoddha talwar dhaal teer kaman bhala
ghoosa laat thappad chanta
""".split()

# Feminine nouns that pluralize with -en.
HINDI_NOUNS_EN = """
raat baat aurat kitab deewar dukaan sadak kalam jeebh aankh
khabar chitthi saree bali chadar balti thali katori fasl
bahen bhains bakri machli chidiya murgi bijli
kameez salwar chunari chappal ghadi anguthi
dawat mithai sabzi chatni kachori jalebi barfi
galli basti haveli kothi jhonpdi charpai khatiya
nazar umeed dua badhai shikayat vinti prarthna
aadat galti bhool kasam saugandh
lehar dhara boond phuhar
kiran jyoti lau chingari
rekha lakeer ginti sankhya
""".split()

HINDI_VERBS = """
kar ja aa kha pi so jag uth baith chal daud bhag ruk thahar
dekh sun bol kah pukar chilla has ro muskura gaa naach khel ghoom
padh likh seekh sikha samajh samjha jaan maan soch bhool yaad
de le rakh utha gira phek pakad chhod khol tod jod kaat seel
ban bana bigad sudhar badal badh ghat khul band
jeet haar lad jhagad mil bichhad milaa
pooch bata sunaa dikha chhupa dhoondh kho paa
maang manga bhej la pahunch nikal ghus lauta laut
kheench dhakel daba ghuma phira hila
dho sukha pees gundh paka tal bhun ubal
pehen utar odh bichha samet
kama kharch bacha luta khareed bech
marr maar bacha jala bujha
likhwa banwa karwa
jama ghata bhaag gin jhuk jhukaa latak litaa
chadh tair doob bah behla
chhoo chaat chaba nigal thook oongh chheenk khans
kaanp sihar tadap machal lajaa sharmaa
chamak damak jhilmila lehra phadphada
garaj baras mehak gamak
jagaa sula khila pila
bula hata mita badha saja sanwar
samhal sambhal atak bhatak latka
""".split()

HINDI_ADJECTIVES = """
accha bura bada chhota lamba chauda uncha neecha gehra mota patla
naya purana taza baasi garam thanda sookha geela saaf ganda
tez dheema halka bhari sakht naram meetha khatta teekha kadwa
kala gora neela peela hara laal safed bhoora
sundar badsurat jawan budha amir gareeb
khush udaas naraz shant bechain thaka
sacha jhootha imandar beiman chalak bholu seedha tedha
asan mushkil mumkin namumkin zaroori bekar
poora adhoora khali bhara akela
pyara dulara mehenga sasta
""".split()

HINDI_MISC = """
main tum aap hum woh yeh koi kuchh sab sabhi har
mera tera uska hamara tumhara apna
kaun kya kab kahan kaise kyun kitna kaisa
yahan wahan idhar udhar andar bahar upar neeche aage peeche paas door
aaj kal parso abhi kabhi hamesha phir dobara jaldi der
bahut thoda zyada kam sirf bilkul lagbhag shayad zaroor
lekin magar aur ya phir isliye kyunki agar warna toh bhi
nahi nahin mat haan ji achha theek sahi galat
namaste shukriya dhanyavad maaf kripya
ek do teen chaar paanch chhe saat aath nau das
gyarah barah terah chaudah pandrah solah satrah atharah unnis bees
pachas sau hazaar lakh crore
pehla doosra teesra aakhri agla pichhla
""".split()


def hindi_noun_forms(stem: str) -> list[str]:
    if stem.endswith("a"):
        return [stem, stem[:-1] + "e", stem[:-1] + "on"]
    if stem.endswith("i"):
        return [stem, stem + "yan", stem + "yon"]
    if stem.endswith("u"):
        return [stem, stem + "on"]
    return [stem, stem + "on"]


def hindi_verb_forms(stem: str) -> list[str]:
    forms = [stem + s for s in ("na", "ta", "ti", "te", "ne", "en")]
    if stem.endswith(tuple(VOWELS)):
        forms += [stem + s for s in ("ya", "yi", "ye")]
    else:
        forms += [stem + s for s in ("a", "i", "e")]
    if not stem.endswith("o"):
        forms.append(stem + "o")
    forms += [stem + s for s in ("ega", "egi", "enge", "oge", "unga", "ungi")]
    if not stem.endswith("kar"):
        forms += [stem + "kar", stem + "ke"]
    forms += [stem + s for s in ("newala", "newali", "newale")]
    return forms


def hindi_adjective_forms(stem: str) -> list[str]:
    if stem.endswith("a"):
        return [stem, stem[:-1] + "e", stem[:-1] + "i"]
    return [stem]


def build_hindi() -> set[str]:
    words: set[str] = set()
    for stem in HINDI_NOUNS:
        words.update(hindi_noun_forms(stem))
    for stem in HINDI_NOUNS_EN:
        words.update((stem, stem + "en", stem + "on"))
    for stem in HINDI_VERBS:
        words.update(hindi_verb_forms(stem))
    for stem in HINDI_ADJECTIVES:
        words.update(hindi_adjective_forms(stem))
    words.update(HINDI_MISC)
    return words


# --- English base vocabulary ----------------------------------------------

EN_VERBS = """
ask answer appear arrive bake become begin believe belong break bring
build burn buy call carry catch change check choose clean climb close
come cook count cover create cross cry cut dance decide deliver describe
die dig discover discuss draw dream drink drive drop earn eat enjoy
enter explain fall feed feel fight fill find finish fit fix fly fold
follow forget forgive gain gather give grow guess handle happen hate
hear help hide hit hold hope hunt hurry imagine improve include invite
join jump keep kick kill kiss knock know land laugh lead learn leave
lend lie lift listen live look lose love make manage mark marry mean
measure meet mention mind miss mix move need notice obtain offer open
order own pack paint pass pay pick plan plant play point prefer prepare
press promise protect prove pull push put rain raise reach read receive
remain remember remove repair repeat reply report rest return ride ring
rise roll run save say see seem sell send serve settle shake share shine
shoot shout show shut sing sit sleep slip smell smile speak spell spend
stand start stay steal stick stop study succeed suffer suggest supply
support suppose swim take talk teach tell thank think throw touch train
travel treat trust try turn understand use visit wait wake walk want
warn wash watch wear weigh welcome win wish wonder work worry write
""".split()

EN_NOUNS = """
ability accident address advice afternoon age agreement air amount
animal apple area arm army art attention aunt autumn baby back ball
bank basket bath beach bear beauty bed bell bird birth blood board boat
body bone book bottle bottom box boy branch bread breakfast bridge
brother building bus business butter button cake camera camp captain
car card care case castle cat cause century chain chair chance cheese
chest chicken child church circle city class clock cloth cloud coal
coast coat coffee colour company condition corner cotton country course
cousin crowd crown cup daughter day death decision degree desk dinner
direction distance doctor dog door doubt dress duck dust duty ear earth
edge effect effort egg end enemy engine evening event example eye face
fact factory family farm father fear feeling field finger fire fish
flag floor flower food foot forest fork fortune friend front fruit
future game garden gate gift girl glass goat gold government grass
ground group guard guest hair half hall hand harbour hat head health
heart hill history hole holiday home honey horse hospital hotel hour
house hundred husband ice idea inch industry iron island job journey
joy judge juice key kind king kitchen knee knife lady lake lamp land
language law leaf leather leg length lesson letter level library light
line lion lip list load loss luck lunch machine man manner map market
master matter meal meaning meat member memory metal method middle milk
million mind minute mirror moment money monkey month moon morning
mother mountain mouse mouth music name nation nature neck needle
neighbour nest news night noise nose note number nurse object ocean
office oil opinion orange owner page pain pair paper parent park part
party path peace pen pencil people person picture piece pig place
plane plate pleasure pocket poem point police pool position pound
power price prince princess prison prize problem process product
profit purpose quality quarter queen question rain reason record
result rice ring river road rock roof room root rose rule salt sand
scene school science sea season seat second secret sense sentence
shadow shape sheep ship shirt shoe shop shore shoulder side sign
silver sister situation size skill skin sky smoke snow society son
song sort sound soup space speed spoon sport spring square stage star
station step stick stone store storm story street strength student
subject sugar summer sun surface system table tail task taste tea
teacher team tear test thing thought thousand ticket time tin title
today tomorrow tongue tool tooth top town toy trade tree trip trouble
truth uncle unit valley value variety vegetable victory view village
voice wall war watch water wave way weather week weight wheat wheel
wife wind window wine winter woman wood wool word world year
account achievement advantage airport album alphabet ambulance
ankle apartment approach arrow article aspect athlete atmosphere
audience avenue average balance balloon banner barrel basement
battery battle beam bean beard beast bedroom beginning behavior
belief belt bench benefit berry bicycle bill biscuit blade blanket
blossom bonus border bowl bracelet brain brick broom brush bubble
bucket budget bulb bundle burden cabin cabbage cable cage calendar
camel canal candle cannon canvas carpet carrot cartoon cattle
ceiling cellar cement channel chapter charm cherry chimney
circuit citizen claw clay cliff clinic closet clue coach coin
collar column comb comfort comment committee concert concrete
contest contract copper cord cork corn cottage cough council
courage crack cradle crane crash crayon cream creature crew
cricket crime crisis crystal cube cucumber culture curtain cushion
cycle dairy damage deck deer delay demand dentist desert design
detail device diamond diary dish district ditch dozen dragon
drain drawer drum eagle economy elbow emergency empire engineer
envelope error escape essay estate excuse exercise exit expense
expert fabric failure fancy fashion feast feather fence fever
fiber figure film flame flash flavor flesh flight flood flour
fountain fox frame fuel funnel furniture garage garbage garlic
gesture ginger glove glue grace grade grain grape gravel guitar
habit hammer handle harvest hazard heap hedge heel helmet herd
hero hinge hobby hook horizon horn hunger hut impact incident
income injury insect instrument insurance invoice item jacket
jail jar jaw jelly jewel joint joke jungle junior jury kettle
keyboard kidney knot label labor ladder lantern laundry lawyer
layer lecture lemon lens lettuce license lid limit liquid litre
lobby lock log luggage lumber magazine magnet maid mail mansion
marble margin mask mat match mattress meadow medal medicine melody
melon merchant mercy mess message mill miner mineral miracle
mission mistake mixture model monster monument mood motion motor
mud muscle museum mushroom mystery nail napkin navy nephew nerve
net network niece noon notebook notice novel nut oak oar oat
obstacle occasion offence onion opera orbit orchard organ outcome
oven owl oxygen package paint palace palm pan pant parcel parrot
passage passenger passion pasta patch pattern pause peak pearl
pepper period permit pet phase phrase pie pillar pillow pilot pin
pine pipe pitch planet plank plaster plastic platform plot plum
poet poison pole pond pony porch port porter portion portrait pot
powder practice praise prayer pride priest principle print privacy
project proof puddle pump pumpkin pupil puppet purse puzzle
pyramid quarrel quest queue rabbit race rack radio raft rail
ranch range rank rate ray razor recipe reward rhythm rib ribbon
riddle ridge rifle risk ritual rival robe robot rocket rod role
routine rubber rug ruin rumor sack saddle sail sailor salad
salary sample sauce sausage scale scarf schedule scheme scholar
screen screw script sculpture section sector seed senior series
servant session shade shaft shell shelter shelf shield shower
shrub signal silk sink site sketch slave sleeve slice slope snack
snail sneeze soap sock soil soldier sole solution sorrow soul
source spark spear spectacle speech sphere spider spinach spirit
sponge spot spray spread spy squirrel stable stack stadium staff
stain stair stamp standard statue steam steel stem stomach stool
strap straw stream stripe stroke structure stuff style substance
suburb subway suit summary summit supper surgeon survey sweater
sword symbol syrup tactic talent tank tap target tax taxi
technique temper temple tenant tent term territory theatre theme
theory therapy thief thread threat throat throne thumb thunder
tide tiger timber tissue toast toe tomato tone topic torch tour
towel tower track tractor traffic tragedy trail trainer transport
trap tray treasure treaty trench trend trial triangle tribe trick
trousers trunk tube tunnel turkey turtle tutor twig twin umbrella
uniform universe vacation van vapor vase vault vehicle verse
vessel victim virtue virus vision vitamin volume vowel voyage
wagon waist wallet walnut wand warmth warrior wax wealth weapon
weed whale whisper whistle widow width wing wire witness wolf
worm wound wrist yard yarn yolk zebra zone
""".split()

EN_ADJECTIVES = """
able afraid alone angry bad beautiful big bitter black blind blue
brave bright broad brown busy calm careful cheap clean clear clever
cold common cool correct crazy cruel curious dark dead dear deep
different difficult dirty dry dull eager early easy empty equal exact
fair false famous fast fat fine firm flat foolish free fresh full
funny general gentle glad good gray great green happy hard heavy high
hollow honest hot huge hungry ill important kind large late lazy light
little lonely long loose loud low lucky mad mild modern narrow near
neat new nice noble noisy normal old open pale perfect pink plain
pleasant polite poor popular possible pretty proper proud public quick
quiet rare raw ready real rich ripe rough round sad safe same secret
serious sharp short sick silent simple slow small smooth soft sore
sour special steep sticky still strange strict strong stupid sweet
tall thick thin tight tiny tired true ugly useful usual warm weak wet
white whole wide wild wise wrong yellow young
""".split()

EN_MISC = """
about above across after again against all almost along already also
although always among and another any anybody anything anywhere around
because before behind below beneath beside between beyond both but by
certainly down during each either else enough even ever every everybody
everything everywhere far few for from here how however if in inside
instead into it its itself just least less many may maybe me might mine
more most much must my myself near nearly neither never nobody none nor
not nothing now nowhere of off often on once only onto or other our
ours out outside over perhaps quite rather really she should since so
some somebody something sometimes somewhere soon still such than that
the their theirs them themselves then there these they this those
through till to together too toward under until up upon us very was
we were what when where which while who whom whose why will with
within without would yes yet you your yours yourself
""".split()

EN_EXTRA = """
action addition adventure agreement amusement announcement argument
arrangement attraction collection competition connection conversation
correction decision description development direction discussion
education election employment enjoyment entertainment examination
excitement expression government imagination information instruction
introduction invention invitation movement operation organization
payment population position possession preparation production
protection punishment qualification relation selection statement
suggestion translation treatment
careless colorless endless fearless harmless helpless homeless
hopeless painless powerless priceless restless useless worthless
beautiful careful cheerful colorful delightful doubtful faithful
graceful grateful harmful helpful hopeful joyful painful peaceful
playful powerful skillful successful thankful thoughtful useful
wonderful youthful
acceptable adorable agreeable available breakable comfortable
enjoyable fashionable laughable movable readable reasonable
respectable suitable valuable washable
ability activity authority capacity celebrity charity community
curiosity density dignity electricity equality facility gravity
honesty humanity identity liberty majority minority necessity
opportunity personality possibility priority property publicity
quantity reality responsibility security similarity simplicity
society university security velocity
dangerous delicious enormous famous generous glorious gorgeous
gracious humorous jealous marvelous mysterious nervous obvious
precious previous religious ridiculous serious spacious tremendous
various victorious
active attractive creative decisive defensive effective expensive
explosive impressive massive native negative passive positive
primitive productive progressive protective relative sensitive
friendship hardship leadership membership ownership partnership
relationship scholarship championship citizenship
brotherhood childhood likelihood neighborhood motherhood fatherhood
freedom kingdom wisdom boredom
distance importance instance acceptance appearance assistance
attendance performance resistance substance
absence audience confidence difference evidence existence influence
intelligence patience presence reference science sentence silence
violence experience
acceptably accidentally actually basically carefully certainly
completely definitely especially eventually exactly finally
frequently generally gradually immediately naturally necessarily
obviously occasionally originally particularly personally probably
properly recently regularly seriously successfully suddenly
unfortunately usually
""".split()


def en_plural(stem: str) -> str:
    if stem.endswith("y") and stem[-2] not in VOWELS:
        return stem[:-1] + "ies"
    if stem.endswith(("s", "x", "z", "ch", "sh")):
        return stem + "es"
    return stem + "s"


def _doubles_final(stem: str) -> bool:
    # Short consonant-vowel-consonant stems double before -ed/-ing.
    return (
        len(stem) <= 4
        and len(stem) >= 3
        and stem[-1] not in VOWELS
        and stem[-1] not in "wxy"
        and stem[-2] in VOWELS
        and stem[-3] not in VOWELS
    )


def en_verb_forms(stem: str) -> list[str]:
    forms = [stem, en_plural(stem)]
    if stem.endswith("e"):
        forms += [stem + "d", stem[:-1] + "ing"]
    elif stem.endswith("y") and stem[-2] not in VOWELS:
        forms += [stem[:-1] + "ied", stem + "ing"]
    elif _doubles_final(stem):
        forms += [stem + stem[-1] + "ed", stem + stem[-1] + "ing"]
    else:
        forms += [stem + "ed", stem + "ing"]
    return forms


def en_adjective_forms(stem: str) -> list[str]:
    forms = [stem]
    if not stem.endswith("ly"):
        if stem.endswith("y") and stem[-2] not in VOWELS:
            forms.append(stem[:-1] + "ily")
        else:
            forms.append(stem + "ly")
    if len(stem) <= 6:
        if stem.endswith("e"):
            forms += [stem + "r", stem + "st"]
        elif stem.endswith("y") and stem[-2] not in VOWELS:
            forms += [stem[:-1] + "ier", stem[:-1] + "iest"]
        elif _doubles_final(stem):
            forms += [stem + stem[-1] + "er", stem + stem[-1] + "est"]
        else:
            forms += [stem + "er", stem + "est"]
    return forms


def build_english() -> set[str]:
    words: set[str] = set()
    for stem in EN_VERBS:
        words.update(en_verb_forms(stem))
    for stem in EN_NOUNS:
        words.update((stem, en_plural(stem)))
    for stem in EN_ADJECTIVES:
        words.update(en_adjective_forms(stem))
    words.update(EN_MISC)
    words.update(EN_EXTRA)
    return words


def main() -> None:
    root = Path(__file__).resolve().parents[1]
    data = root / "data"
    data.mkdir(exist_ok=True)
    for name, words in (("hindi", build_hindi()), ("english", build_english())):
        kept = sorted(w for w in words if WORD_RE.match(w))
        path = data / f"{name}_words.txt"
        path.write_text("\n".join(kept) + "\n", encoding="utf-8", newline="\n")
        print(f"{path}: {len(kept)} words")


if __name__ == "__main__":
    main()
